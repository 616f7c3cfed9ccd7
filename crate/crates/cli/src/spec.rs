//! The textual graph-spec grammar shared by the CLI and report ids.
//!
//! A spec is one of
//! * a family: `path:6`, `grid:4,5`, `petersen`, ...
//! * a literal: `g6:<graph6 string>`
//! * a product: `corona(path:3;complete:2)`, `splitting(cycle:5)`,
//!   `rooted_product(path:3;path:4;1)`, `iterated_corona(path:2;path:2;2)`,
//!   `generalized_corona(path:2;path:2;path:3)` - arguments separated by
//!   `;` because family parameters already use `,`.

use domforce_core::{FamilySpec, Graph, ProductSpec};
use thiserror::Error;

use crate::format;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("empty graph spec")]
    Empty,
    #[error("unknown family or product {0:?}")]
    UnknownName(String),
    #[error("bad parameters for {name}: {params:?}")]
    BadParams { name: String, params: String },
    #[error("{name} expects {expected} arguments, got {got}")]
    BadArity {
        name: String,
        expected: &'static str,
        got: usize,
    },
    #[error("unbalanced parentheses in {0:?}")]
    Unbalanced(String),
    #[error(transparent)]
    Format(#[from] format::FormatError),
    #[error(transparent)]
    Core(#[from] domforce_core::Error),
}

/// A parsed graph spec; `id()` round-trips through `parse()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Family(FamilySpec),
    Graph6(String),
    Join(Box<GraphSpec>, Box<GraphSpec>),
    Corona(Box<GraphSpec>, Box<GraphSpec>),
    GeneralizedCorona(Box<GraphSpec>, Vec<GraphSpec>),
    IteratedCorona(Box<GraphSpec>, Box<GraphSpec>, usize),
    RootedProduct(Box<GraphSpec>, Box<GraphSpec>, usize),
    Cartesian(Box<GraphSpec>, Box<GraphSpec>),
    Splitting(Box<GraphSpec>),
}

impl GraphSpec {
    pub fn parse(input: &str) -> Result<GraphSpec, SpecError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(SpecError::Empty);
        }
        if let Some(rest) = s.strip_prefix("g6:") {
            return Ok(GraphSpec::Graph6(rest.trim().to_string()));
        }
        if let Some(open) = s.find('(') {
            let name = s[..open].trim();
            let Some(body) = s[open + 1..].strip_suffix(')') else {
                return Err(SpecError::Unbalanced(s.to_string()));
            };
            let args = split_top_level(body)?;
            return product_from_args(name, &args, s);
        }
        Ok(GraphSpec::Family(parse_family(s)?))
    }

    /// Canonical textual form.
    pub fn id(&self) -> String {
        match self {
            GraphSpec::Family(f) => f.id(),
            GraphSpec::Graph6(s) => format!("g6:{s}"),
            GraphSpec::Join(a, b) => format!("join({};{})", a.id(), b.id()),
            GraphSpec::Corona(a, b) => format!("corona({};{})", a.id(), b.id()),
            GraphSpec::GeneralizedCorona(a, parts) => {
                let mut out = format!("generalized_corona({}", a.id());
                for p in parts {
                    out.push(';');
                    out.push_str(&p.id());
                }
                out.push(')');
                out
            }
            GraphSpec::IteratedCorona(a, b, k) => {
                format!("iterated_corona({};{};{k})", a.id(), b.id())
            }
            GraphSpec::RootedProduct(a, b, root) => {
                format!("rooted_product({};{};{root})", a.id(), b.id())
            }
            GraphSpec::Cartesian(a, b) => format!("cartesian({};{})", a.id(), b.id()),
            GraphSpec::Splitting(a) => format!("splitting({})", a.id()),
        }
    }

    pub fn build(&self) -> Result<Graph, SpecError> {
        match self {
            GraphSpec::Family(f) => Ok(f.build()?),
            GraphSpec::Graph6(s) => Ok(format::from_graph6(s)?),
            _ => Ok(self
                .to_product_spec()?
                .expect("non-family, non-literal specs are products")
                .build()?),
        }
    }

    /// The core product description with operands built, when this spec is a
    /// product; `None` for plain families and literals.
    pub fn to_product_spec(&self) -> Result<Option<ProductSpec>, SpecError> {
        Ok(Some(match self {
            GraphSpec::Family(_) | GraphSpec::Graph6(_) => return Ok(None),
            GraphSpec::Join(a, b) => ProductSpec::Join {
                a: a.build()?,
                b: b.build()?,
            },
            GraphSpec::Corona(a, b) => ProductSpec::Corona {
                a: a.build()?,
                b: b.build()?,
            },
            GraphSpec::GeneralizedCorona(a, parts) => ProductSpec::GeneralizedCorona {
                a: a.build()?,
                parts: parts.iter().map(|p| p.build()).collect::<Result<_, _>>()?,
            },
            GraphSpec::IteratedCorona(a, b, k) => ProductSpec::IteratedCorona {
                a: a.build()?,
                b: b.build()?,
                k: *k,
            },
            GraphSpec::RootedProduct(a, b, root) => ProductSpec::RootedProduct {
                a: a.build()?,
                b: b.build()?,
                root: *root,
            },
            GraphSpec::Cartesian(a, b) => ProductSpec::Cartesian {
                a: a.build()?,
                b: b.build()?,
            },
            GraphSpec::Splitting(a) => ProductSpec::Splitting { a: a.build()? },
        }))
    }

    /// The inner family of a `splitting(<family>)` spec, when that is the
    /// shape (used to pick splitting-graph predictions).
    pub fn splitting_inner_family(&self) -> Option<&FamilySpec> {
        match self {
            GraphSpec::Splitting(inner) => match inner.as_ref() {
                GraphSpec::Family(f) => Some(f),
                _ => None,
            },
            _ => None,
        }
    }
}

fn split_top_level(body: &str) -> Result<Vec<String>, SpecError> {
    let mut depth = 0usize;
    let mut out = Vec::new();
    let mut current = String::new();
    for c in body.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| SpecError::Unbalanced(body.to_string()))?;
                current.push(c);
            }
            ';' if depth == 0 => {
                out.push(core::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    if depth != 0 {
        return Err(SpecError::Unbalanced(body.to_string()));
    }
    out.push(current);
    Ok(out)
}

fn product_from_args(name: &str, args: &[String], whole: &str) -> Result<GraphSpec, SpecError> {
    let arity = |expected: &'static str| SpecError::BadArity {
        name: name.to_string(),
        expected,
        got: args.len(),
    };
    let sub = |i: usize| GraphSpec::parse(&args[i]).map(Box::new);
    let num = |i: usize| -> Result<usize, SpecError> {
        args[i].trim().parse().map_err(|_| SpecError::BadParams {
            name: name.to_string(),
            params: args[i].clone(),
        })
    };
    match name {
        "join" if args.len() == 2 => Ok(GraphSpec::Join(sub(0)?, sub(1)?)),
        "corona" if args.len() == 2 => Ok(GraphSpec::Corona(sub(0)?, sub(1)?)),
        "cartesian" if args.len() == 2 => Ok(GraphSpec::Cartesian(sub(0)?, sub(1)?)),
        "splitting" if args.len() == 1 => Ok(GraphSpec::Splitting(sub(0)?)),
        "iterated_corona" if args.len() == 3 => {
            Ok(GraphSpec::IteratedCorona(sub(0)?, sub(1)?, num(2)?))
        }
        "rooted_product" if args.len() == 3 => {
            Ok(GraphSpec::RootedProduct(sub(0)?, sub(1)?, num(2)?))
        }
        "generalized_corona" if args.len() >= 2 => {
            let parts = args[1..]
                .iter()
                .map(|a| GraphSpec::parse(a))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GraphSpec::GeneralizedCorona(sub(0)?, parts))
        }
        "join" | "corona" | "cartesian" => Err(arity("2")),
        "splitting" => Err(arity("1")),
        "iterated_corona" | "rooted_product" => Err(arity("3")),
        "generalized_corona" => Err(arity(">= 2")),
        _ => Err(SpecError::UnknownName(whole.to_string())),
    }
}

fn parse_family(s: &str) -> Result<FamilySpec, SpecError> {
    let (name, params) = match s.split_once(':') {
        Some((n, p)) => (n.trim(), p.trim()),
        None => (s, ""),
    };
    let bad = || SpecError::BadParams {
        name: name.to_string(),
        params: params.to_string(),
    };
    let nums: Vec<usize> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?
    };
    let one = || -> Result<usize, SpecError> {
        if nums.len() == 1 {
            Ok(nums[0])
        } else {
            Err(bad())
        }
    };
    let two = || -> Result<(usize, usize), SpecError> {
        if nums.len() == 2 {
            Ok((nums[0], nums[1]))
        } else {
            Err(bad())
        }
    };
    Ok(match name {
        "path" => FamilySpec::Path { n: one()? },
        "cycle" => FamilySpec::Cycle { n: one()? },
        "complete" => FamilySpec::Complete { n: one()? },
        "complete_bipartite" => {
            let (m, n) = two()?;
            FamilySpec::CompleteBipartite { m, n }
        }
        "star" => FamilySpec::Star { n: one()? },
        "wheel" => FamilySpec::Wheel { n: one()? },
        "helm" => FamilySpec::Helm { m: one()? },
        "coconut" => {
            let (m, n) = two()?;
            FamilySpec::Coconut { m, n }
        }
        "hypercube" => FamilySpec::Hypercube { k: one()? },
        "petersen" => {
            if nums.is_empty() {
                FamilySpec::Petersen
            } else {
                return Err(bad());
            }
        }
        "grid" => {
            let (p, q) = two()?;
            FamilySpec::Grid { p, q }
        }
        "ladder" => FamilySpec::Ladder { n: one()? },
        "prism" => FamilySpec::Prism { n: one()? },
        _ => return Err(SpecError::UnknownName(s.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_roundtrip() {
        for id in [
            "path:6",
            "cycle:5",
            "complete:4",
            "complete_bipartite:2,3",
            "star:4",
            "wheel:7",
            "helm:4",
            "coconut:3,2",
            "hypercube:3",
            "petersen",
            "grid:4,5",
            "ladder:3",
            "prism:5",
        ] {
            let spec = GraphSpec::parse(id).unwrap();
            assert_eq!(spec.id(), id);
            assert!(spec.build().is_ok(), "{id} should build");
        }
    }

    #[test]
    fn products_roundtrip_and_build() {
        let cases = [
            ("corona(path:3;complete:2)", 9),
            ("join(complete:2;complete:2)", 4),
            ("splitting(path:2)", 4),
            ("iterated_corona(path:2;path:2;2)", 18),
            ("rooted_product(path:3;path:4;1)", 12),
            ("cartesian(cycle:4;path:2)", 8),
            ("generalized_corona(path:2;path:2;path:3)", 7),
            ("splitting(grid:2,3)", 12),
        ];
        for (id, order) in cases {
            let spec = GraphSpec::parse(id).unwrap();
            assert_eq!(spec.id(), id);
            assert_eq!(spec.build().unwrap().order(), order, "{id}");
        }
    }

    #[test]
    fn graph6_literals() {
        let spec = GraphSpec::parse("g6:Bg").unwrap();
        assert_eq!(spec.build().unwrap().order(), 3);
        assert_eq!(spec.id(), "g6:Bg");
    }

    #[test]
    fn errors() {
        assert!(matches!(GraphSpec::parse(""), Err(SpecError::Empty)));
        assert!(matches!(
            GraphSpec::parse("heptagon:7"),
            Err(SpecError::UnknownName(_))
        ));
        assert!(matches!(
            GraphSpec::parse("path:x"),
            Err(SpecError::BadParams { .. })
        ));
        assert!(matches!(
            GraphSpec::parse("grid:4"),
            Err(SpecError::BadParams { .. })
        ));
        assert!(matches!(
            GraphSpec::parse("corona(path:3)"),
            Err(SpecError::BadArity { .. })
        ));
        assert!(matches!(
            GraphSpec::parse("corona(path:3;cycle:4"),
            Err(SpecError::Unbalanced(_))
        ));
        // structurally invalid parameters surface the core error
        assert!(GraphSpec::parse("cycle:2").unwrap().build().is_err());
    }
}
