//! Code arrays attached to left paths.
//!
//! Entry `b` is the smallest `j_a` among moves whose interval `[i_a, j_a]`
//! covers `b` (zero if none). The label is the largest `j` of a move whose
//! interval properly contains the `j`-index of another move.

use std::fmt;

use serde::Serialize;

use crate::moves::LeftPath;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Code {
    pub entries: Vec<usize>,
    pub label: Option<usize>,
}

pub fn path_to_code(p: &LeftPath, r: usize) -> Code {
    let moves = p.moves();
    let entries = (1..=r)
        .map(|b| {
            moves
                .iter()
                .filter(|m| m.i <= b && b <= m.j)
                .map(|m| m.j)
                .min()
                .unwrap_or(0)
        })
        .collect();
    let label = moves
        .iter()
        .filter(|m| moves.iter().any(|o| o != *m && m.i <= o.j && o.j <= m.j))
        .map(|m| m.j)
        .max();
    Code { entries, label }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", body.join(" "))?;
        if let Some(l) = self.label {
            write!(f, " [{l}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::WeightDiagram;

    fn code(s: &str) -> Code {
        let d: WeightDiagram = "@1:xx.x>.x<.<".parse().unwrap();
        path_to_code(&LeftPath::parse(&d, s).unwrap(), 4)
    }

    #[test]
    fn printed_examples() {
        assert_eq!(
            code("L11 L13"),
            Code {
                entries: vec![1, 3, 3, 0],
                label: Some(3)
            }
        );
        assert_eq!(
            code("L11 L33 L14"),
            Code {
                entries: vec![1, 4, 3, 4],
                label: Some(4)
            }
        );
        assert_eq!(
            code("∅"),
            Code {
                entries: vec![0, 0, 0, 0],
                label: None
            }
        );
        assert_eq!(code("L34").to_string(), "0 0 4 4");
        assert_eq!(code("L11 L12 L34").to_string(), "1 2 4 4 [2]");
    }
}
