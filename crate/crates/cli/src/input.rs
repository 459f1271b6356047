use std::path::Path;

use kgraph_core::{
    build_figure2, build_lambda_n, build_omega, build_two_regime_example, Degree, GraphError,
    KGraph, RegimeChoice, SkeletonFile,
};

use crate::CliError;

fn numbers(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("expected a non-negative integer, got `{x}`")))
        })
        .collect()
}

fn regime(s: &str) -> Result<RegimeChoice, CliError> {
    match s {
        "A" | "a" => Ok(RegimeChoice::A),
        "B" | "b" => Ok(RegimeChoice::B),
        _ => Err(CliError::Usage(format!("regime must be A or B, got `{s}`"))),
    }
}

/// `omega:k,m1,..,mk`, `lambda_n:n,tail`, `figure2:A|B[,width]` or
/// `two_regime:A|B`.
pub fn build(spec: &str) -> Result<KGraph, CliError> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("builder spec `{spec}` has no `:`")))?;
    let graph = match name {
        "omega" => {
            let v = numbers(args)?;
            let k = *v.first().ok_or_else(|| CliError::Usage("omega needs k".into()))? as usize;
            if v.len() != k + 1 {
                return Err(CliError::Usage(format!("omega:{k} needs {k} extents")));
            }
            build_omega(k, &Degree::new(v[1..].to_vec()))?
        }
        "lambda_n" => match numbers(args)?.as_slice() {
            [n] => build_lambda_n(*n as usize, 0)?,
            [n, tail] => build_lambda_n(*n as usize, *tail as usize)?,
            _ => return Err(CliError::Usage("lambda_n takes n[,tail]".into())),
        },
        "figure2" => {
            let (choice, width) = match args.split_once(',') {
                Some((c, w)) => (c, numbers(w)?[0] as usize),
                None => (args, 2),
            };
            build_figure2(regime(choice)?, width)?
        }
        "two_regime" => build_two_regime_example(regime(args)?)?,
        _ => return Err(CliError::Usage(format!("unknown builder `{name}`"))),
    };
    Ok(graph)
}

pub fn load(path: &Path) -> Result<KGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = SkeletonFile::from_json(&text)?;
    Ok(file.into_graph()?)
}

pub fn resolve(file: Option<&Path>, builder: Option<&str>) -> Result<KGraph, CliError> {
    match (file, builder) {
        (Some(p), None) => load(p),
        (None, Some(b)) => build(b),
        (Some(_), Some(_)) => Err(CliError::Usage("give either a file or --builder, not both".into())),
        (None, None) => Err(CliError::Graph(GraphError::Parse("no input graph given".into()))),
    }
}
