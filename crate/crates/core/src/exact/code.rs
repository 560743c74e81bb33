use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};

/// Largest blocklength whose codewords fit a `u64` mask.
pub const MAX_MASK_BITS: usize = 64;

/// A concrete LDGM code: `n` generators, each attached to a set of the `m`
/// source positions. The codeword of index word `w` is `wG`, bit `j` being
/// the parity of the generators attached to position `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdgmCode {
    m: usize,
    adjacency: Vec<Vec<usize>>,
}

impl LdgmCode {
    /// `adjacency[g]` lists the positions touched by generator `g`, strictly
    /// ascending.
    pub fn new(m: usize, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Infeasible("blocklength must be positive".into()));
        }
        for (g, row) in adjacency.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Infeasible(format!(
                    "generator {g}: positions must be strictly ascending"
                )));
            }
            if let Some(&j) = row.iter().find(|&&j| j >= m) {
                return Err(Error::Infeasible(format!(
                    "generator {g}: position {j} outside [0, {m})"
                )));
            }
        }
        Ok(LdgmCode { m, adjacency })
    }

    /// Samples a code whose generator degrees realize `dist` exactly.
    ///
    /// The degree multiset `{n L_i copies of i}` is shuffled, then each
    /// generator picks its positions uniformly without replacement.
    /// Different generators may share positions. Deterministic in `seed`.
    pub fn sample(m: usize, n: usize, dist: &DegreeDistribution, seed: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Infeasible("blocklength must be positive".into()));
        }
        let mut degrees = Vec::with_capacity(n);
        for (deg, count) in degree_counts_for(dist, n)? {
            if deg as usize > m {
                return Err(Error::Infeasible(format!(
                    "degree {deg} exceeds blocklength {m}"
                )));
            }
            degrees.extend(std::iter::repeat_n(deg as usize, count));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        degrees.shuffle(&mut rng);
        let adjacency = degrees
            .into_iter()
            .map(|deg| {
                let mut row = index::sample(&mut rng, m, deg).into_vec();
                row.sort_unstable();
                row
            })
            .collect();
        Ok(LdgmCode { m, adjacency })
    }

    /// Blocklength (number of source positions).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of generators.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn rate(&self) -> f64 {
        self.n() as f64 / self.m as f64
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// `(degree, number of generators)` in ascending degree order.
    pub fn degree_counts(&self) -> Vec<(u32, usize)> {
        let mut degs = self.degrees();
        degs.sort_unstable();
        let mut out: Vec<(u32, usize)> = Vec::new();
        for d in degs {
            match out.last_mut() {
                Some((last, c)) if *last as usize == d => *c += 1,
                _ => out.push((d as u32, 1)),
            }
        }
        out
    }

    /// Empirical generator degree distribution; `None` without generators.
    pub fn degree_distribution(&self) -> Option<DegreeDistribution> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let entries = self
            .degree_counts()
            .into_iter()
            .map(|(d, c)| (d, c as f64 / n as f64))
            .collect();
        DegreeDistribution::new(entries).ok()
    }

    /// `wG` over GF(2).
    pub fn encode(&self, w: &[bool]) -> Result<Vec<bool>> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: w.len(),
            });
        }
        let mut out = vec![false; self.m];
        for (row, _) in self.adjacency.iter().zip(w).filter(|(_, &bit)| bit) {
            for &j in row {
                out[j] ^= true;
            }
        }
        Ok(out)
    }

    /// Each generator's row of `G` as a bit mask (bit `j` = position `j`).
    pub(crate) fn generator_masks(&self) -> Result<Vec<u64>> {
        if self.m > MAX_MASK_BITS {
            return Err(Error::Budget {
                what: "m",
                value: self.m,
                limit: MAX_MASK_BITS,
            });
        }
        Ok(self
            .adjacency
            .iter()
            .map(|row| row.iter().fold(0u64, |acc, &j| acc | 1 << j))
            .collect())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }
}

/// `n L_i` for every degree, which must all be integers.
pub(crate) fn degree_counts_for(dist: &DegreeDistribution, n: usize) -> Result<Vec<(u32, usize)>> {
    let mut out = Vec::new();
    let mut total = 0;
    for &(deg, frac) in dist.entries() {
        let exact = frac * n as f64;
        let count = exact.round();
        if (exact - count).abs() > 1e-9 {
            return Err(Error::Infeasible(format!(
                "n * L_{deg} = {exact} is not an integer"
            )));
        }
        let count = count as usize;
        total += count;
        if count > 0 {
            out.push((deg, count));
        }
    }
    if total != n {
        return Err(Error::Infeasible(format!(
            "degree counts sum to {total}, not n = {n}"
        )));
    }
    Ok(out)
}

/// Code file format: a header line `ldgm <m> <n>` followed by one line per
/// generator listing its positions, 0-based, ascending, space separated.
impl fmt::Display for LdgmCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ldgm {} {}", self.m, self.n())?;
        for row in &self.adjacency {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for LdgmCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (m, n) = match fields.as_slice() {
            ["ldgm", m, n] => (
                m.parse::<usize>()
                    .map_err(|_| parse_err(1, format!("bad blocklength {m:?}")))?,
                n.parse::<usize>()
                    .map_err(|_| parse_err(1, format!("bad generator count {n:?}")))?,
            ),
            _ => {
                return Err(parse_err(
                    1,
                    format!("expected `ldgm <m> <n>`, got {header:?}"),
                ))
            }
        };
        let mut adjacency = Vec::with_capacity(n);
        for g in 0..n {
            let line_no = g + 2;
            let line = lines
                .next()
                .ok_or_else(|| parse_err(line_no, format!("missing row for generator {g}")))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(line_no, format!("bad position {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(parse_err(
                    line_no,
                    "positions must be strictly ascending".into(),
                ));
            }
            if let Some(&j) = row.iter().find(|&&j| j >= m) {
                return Err(parse_err(line_no, format!("position {j} outside [0, {m})")));
            }
            adjacency.push(row);
        }
        if let Some((k, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            return Err(parse_err(
                n + 2 + k,
                format!("unexpected trailing line {extra:?}"),
            ));
        }
        LdgmCode::new(m, adjacency).map_err(|e| parse_err(1, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A 7 x 4 code with every generator of degree 3.
    fn fixed_7x4() -> LdgmCode {
        LdgmCode::new(
            7,
            vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6], vec![0, 3, 6]],
        )
        .unwrap()
    }

    #[test]
    fn sample_realizes_degrees() {
        let l3 = DegreeDistribution::regular(3).unwrap();
        let code = LdgmCode::sample(7, 4, &l3, 11).unwrap();
        assert_eq!(code.m(), 7);
        assert_eq!(code.n(), 4);
        assert!((code.rate() - 4.0 / 7.0).abs() < 1e-15);
        assert!(code.degrees().iter().all(|&d| d == 3));
        assert_eq!(code.degree_distribution().unwrap(), l3);

        let l1 = DegreeDistribution::regular(1).unwrap();
        let code = LdgmCode::sample(4, 2, &l1, 0).unwrap();
        assert!(code.adjacency().iter().all(|row| row.len() == 1));

        let mixed: DegreeDistribution = "1:0.5,3:0.5".parse().unwrap();
        let code = LdgmCode::sample(10, 4, &mixed, 5).unwrap();
        assert_eq!(code.degree_counts(), vec![(1, 2), (3, 2)]);
    }

    #[test]
    fn sample_is_deterministic() {
        let l2 = DegreeDistribution::regular(2).unwrap();
        let a = LdgmCode::sample(14, 7, &l2, 42).unwrap();
        let b = LdgmCode::sample(14, 7, &l2, 42).unwrap();
        assert_eq!(a, b);
        let c = LdgmCode::sample(14, 7, &l2, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sample_rejects_infeasible() {
        let l5 = DegreeDistribution::regular(5).unwrap();
        assert!(LdgmCode::sample(4, 2, &l5, 0).is_err());
        let mixed: DegreeDistribution = "1:0.5,3:0.5".parse().unwrap();
        assert!(LdgmCode::sample(10, 3, &mixed, 0).is_err());
        assert!(LdgmCode::sample(0, 0, &l5, 0).is_err());
    }

    #[test]
    fn encode_examples() {
        let code = fixed_7x4();
        assert_eq!(code.encode(&[false; 4]).unwrap(), vec![false; 7]);
        let e0 = code.encode(&[true, false, false, false]).unwrap();
        assert_eq!(e0, vec![true, true, true, false, false, false, false]);
        // e_1 + e_2: {0,1,2} xor {2,3,4} = {0,1,3,4}
        let e01 = code.encode(&[true, true, false, false]).unwrap();
        assert_eq!(e01, vec![true, true, false, true, true, false, false]);
        assert!(code.encode(&[true; 3]).is_err());
    }

    #[test]
    fn code_file_round_trip() {
        let code = fixed_7x4();
        let text = code.to_string();
        assert_eq!(text, "ldgm 7 4\n0 1 2\n2 3 4\n4 5 6\n0 3 6\n");
        assert_eq!(text.parse::<LdgmCode>().unwrap(), code);
        let empty = LdgmCode::new(8, vec![]).unwrap();
        assert_eq!(empty.to_string().parse::<LdgmCode>().unwrap(), empty);
        let with_zero_degree = LdgmCode::new(3, vec![vec![], vec![1]]).unwrap();
        assert_eq!(
            with_zero_degree.to_string().parse::<LdgmCode>().unwrap(),
            with_zero_degree
        );
    }

    #[test]
    fn code_file_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("ldpc 7 1\n0\n", 1),
            ("ldgm 7 2\n0 1\n", 3),
            ("ldgm 7 1\n0 x\n", 2),
            ("ldgm 7 1\n3 1\n", 2),
            ("ldgm 7 1\n0 9\n", 2),
            ("ldgm 7 1\n0\n1\n", 3),
        ];
        for (text, want) in cases {
            match text.parse::<LdgmCode>() {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }
}
