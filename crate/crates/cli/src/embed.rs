//! Text format for embedding specifications.
//!
//! ```text
//! # comments and blank lines are ignored
//! target-dim 10
//! slots 9 10            # omit for same-degree embeddings
//! gen (1 3 5 7 9)(2 4 6 8 10)
//! gen (1 2)(3 4)        # any number of generators
//! gen (1 2) neg 3 7     # η = -1 at the listed indices
//! bound 1000000         # optional closure cap
//! ```

use specforms::construct::EmbeddingSpec;
use specforms::symmetry::{SignedPermutation, DEFAULT_GROUP_BOUND};
use specforms::{Error, Result};

pub fn parse_embedding_spec(input: &str) -> Result<EmbeddingSpec> {
    let mut target_dim: Option<u8> = None;
    let mut slots: Vec<u8> = Vec::new();
    let mut gen_lines: Vec<(usize, String)> = Vec::new();
    let mut bound = DEFAULT_GROUP_BOUND;
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        if let Some(rest) = line.strip_prefix("target-dim") {
            target_dim = Some(rest.trim().parse().map_err(|_| fail("bad target-dim"))?);
        } else if let Some(rest) = line.strip_prefix("slots") {
            for tok in rest.split_whitespace() {
                slots.push(tok.parse().map_err(|_| fail("bad slot index"))?);
            }
        } else if let Some(rest) = line.strip_prefix("gen") {
            gen_lines.push((lineno + 1, rest.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("bound") {
            bound = rest.trim().parse().map_err(|_| fail("bad bound"))?;
        } else {
            return Err(fail("expected target-dim, slots, gen or bound"));
        }
    }
    let Some(d) = target_dim else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing target-dim".into(),
        });
    };
    let mut generators = Vec::new();
    for (lineno, text) in gen_lines {
        let (cycles, negs) = match text.split_once("neg") {
            Some((c, n)) => (c.trim().to_string(), n.trim().to_string()),
            None => (text, String::new()),
        };
        let pure = SignedPermutation::from_cycles(d, &cycles).map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        if negs.is_empty() {
            generators.push(pure);
        } else {
            let mut etas = vec![1i8; d as usize];
            for tok in negs.split_whitespace() {
                let i: usize = tok.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: "bad sign index".into(),
                })?;
                if i == 0 || i > d as usize {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("sign index {i} outside 1..={d}"),
                    });
                }
                etas[i - 1] = -1;
            }
            generators.push(SignedPermutation::new(pure.images().to_vec(), &etas)?);
        }
    }
    let mut spec = EmbeddingSpec::new(d, slots, generators);
    spec.bound = bound;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec() {
        let text = "# lift\ntarget-dim 10\nslots 9 10\ngen (1 3 5 7 9)(2 4 6 8 10)\nbound 500\n";
        let spec = parse_embedding_spec(text).unwrap();
        assert_eq!(spec.target_dim, 10);
        assert_eq!(spec.slots, vec![9, 10]);
        assert_eq!(spec.generators.len(), 1);
        assert_eq!(spec.bound, 500);
    }

    #[test]
    fn parses_signed_generator() {
        let text = "target-dim 4\ngen (1 2) neg 3 4\n";
        let spec = parse_embedding_spec(text).unwrap();
        assert_eq!(spec.generators[0].eta(3), -1);
        assert_eq!(spec.generators[0].eta(1), 1);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_embedding_spec("target-dim x\n").is_err());
        assert!(parse_embedding_spec("gen (1 2)\n").is_err());
    }
}
