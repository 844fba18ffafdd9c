//! Packing sequences `S = (s_1, s_2, ...)`, the coordinatewise dominance
//! order, and sequence classes given by pins and lower bounds.
//!
//! Text syntax: a comma list of values where `v^k` repeats `v` k times,
//! followed by `+` (repeat the last value forever) or `!` (colors past the
//! list may be reused only across components). A bare list means `!`.
//! `1,3^2+` is `(1,3,3,3,...)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("packing sequence is empty")]
    Empty,
    #[error("packing sequence values must be positive (index {0})")]
    NonPositive(usize),
    #[error("packing sequence must be non-decreasing (s_{index} = {value} follows {prev_value})")]
    Decreasing { index: usize, value: u32, prev_value: u32 },
    #[error("cannot parse packing sequence {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("sequence class admits no sequence with {0} colors")]
    ClassEmpty(usize),
    #[error("unknown sequence class {0:?}")]
    UnknownClass(String),
}

/// How `s_i` is resolved for `i` past the stored values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extension {
    RepeatLast,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingSequence {
    values: Vec<u32>,
    extension: Extension,
}

impl PackingSequence {
    /// Value returned for unbounded indices; larger than any distance in a
    /// graph this crate can represent.
    pub const UNBOUNDED: u32 = 1 << 20;

    pub fn new(values: Vec<u32>, extension: Extension) -> Result<Self, PackingError> {
        if values.is_empty() {
            return Err(PackingError::Empty);
        }
        for (i, &v) in values.iter().enumerate() {
            if v == 0 {
                return Err(PackingError::NonPositive(i + 1));
            }
            if i > 0 && v < values[i - 1] {
                return Err(PackingError::Decreasing {
                    index: i + 1,
                    value: v,
                    prev_value: values[i - 1],
                });
            }
        }
        Ok(PackingSequence { values, extension })
    }

    /// `(values..., last, last, ...)`.
    pub fn repeating(values: &[u32]) -> Result<Self, PackingError> {
        Self::new(values.to_vec(), Extension::RepeatLast)
    }

    /// `(1, 2, 3, ...)`: ordinary packing colorings. Stored up to the
    /// largest supported graph order, which bounds the number of colors.
    pub fn packing() -> Self {
        Self::arithmetic(crate::graph::Graph::MAX_ORDER)
    }

    pub fn arithmetic(len: usize) -> Self {
        PackingSequence {
            values: (1..=len.max(1) as u32).collect(),
            extension: Extension::Unbounded,
        }
    }

    /// `(1, 1, 1, ...)`: proper colorings.
    pub fn proper() -> Self {
        PackingSequence {
            values: vec![1],
            extension: Extension::RepeatLast,
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    /// `s_i` for a 1-based color index `i`.
    pub fn value_at(&self, i: usize) -> u32 {
        assert!(i >= 1, "color indices start at 1");
        match self.values.get(i - 1) {
            Some(&v) => v,
            None => match self.extension {
                Extension::RepeatLast => *self.values.last().expect("non-empty"),
                Extension::Unbounded => Self::UNBOUNDED,
            },
        }
    }

    /// The first `k` values `(s_1, ..., s_k)`.
    pub fn prefix(&self, k: usize) -> Vec<u32> {
        (1..=k).map(|i| self.value_at(i)).collect()
    }

    /// Number of leading ones, the `l` in `(1^l, s_{l+1}, ...)`. `None` when
    /// every value is 1.
    pub fn leading_ones(&self) -> Option<usize> {
        let l = self.values.iter().take_while(|&&v| v == 1).count();
        if l == self.values.len() && self.extension == Extension::RepeatLast {
            None
        } else {
            Some(l)
        }
    }

    /// Replaces every `s_i` by `min(s_i, cap)`, tail included.
    pub fn capped(&self, cap: u32) -> Self {
        let mut values: Vec<u32> = self.values.iter().map(|&v| v.min(cap)).collect();
        if self.extension == Extension::Unbounded {
            values.push(cap);
        }
        PackingSequence {
            values,
            extension: Extension::RepeatLast,
        }
    }
}

/// `s2 ⪰ s1`: `s2` is at least `s1` at every index.
pub fn dominates(s2: &PackingSequence, s1: &PackingSequence) -> bool {
    // Past both stored prefixes each sequence is constant, so one extra
    // index settles the tails.
    let len = s1.values.len().max(s2.values.len()) + 1;
    (1..=len).all(|i| s2.value_at(i) >= s1.value_at(i))
}

impl fmt::Display for PackingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.values.len() {
            let v = self.values[i];
            let mut j = i;
            while j < self.values.len() && self.values[j] == v {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", v, j - i)?;
            } else {
                write!(f, "{v}")?;
            }
            i = j;
        }
        f.write_str(match self.extension {
            Extension::RepeatLast => "+",
            Extension::Unbounded => "!",
        })
    }
}

impl FromStr for PackingSequence {
    type Err = PackingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let syntax = |reason: &str| PackingError::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (body, extension) = if let Some(b) = t.strip_suffix('+') {
            (b, Extension::RepeatLast)
        } else if let Some(b) = t.strip_suffix('!') {
            (b, Extension::Unbounded)
        } else {
            (t, Extension::Unbounded)
        };
        if body.trim().is_empty() {
            return Err(PackingError::Empty);
        }
        let mut values = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let (v, reps) = match part.split_once('^') {
                Some((v, r)) => (
                    v.trim(),
                    r.trim().parse::<usize>().map_err(|_| syntax("bad repeat count"))?,
                ),
                None => (part, 1),
            };
            if reps == 0 || reps > 4096 {
                return Err(syntax("repeat count must be in 1..=4096"));
            }
            let v: u32 = v.parse().map_err(|_| syntax("expected a positive integer"))?;
            values.extend(std::iter::repeat_n(v, reps));
        }
        PackingSequence::new(values, extension)
    }
}

/// Constraint on one coordinate of a sequence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact(u32),
    AtLeast(u32),
}

impl Bound {
    fn lower(self) -> u32 {
        match self {
            Bound::Exact(v) | Bound::AtLeast(v) => v,
        }
    }
}

/// A set of packing sequences described by per-index pins and lower bounds,
/// e.g. `{s_1 = 1, s_2 >= 3, s_3 = 3}`. Indices past the listed bounds are
/// constrained only by monotonicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceClass {
    bounds: Vec<Bound>,
}

impl SequenceClass {
    pub fn new(bounds: Vec<Bound>) -> Self {
        SequenceClass { bounds }
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    /// True iff `s` satisfies every bound.
    pub fn contains(&self, s: &PackingSequence) -> bool {
        self.bounds.iter().enumerate().all(|(i, b)| {
            let v = s.value_at(i + 1);
            match *b {
                Bound::Exact(p) => v == p,
                Bound::AtLeast(p) => v >= p,
            }
        })
    }

    /// Finite sample of the class on colors `1..=k`. Each unpinned
    /// coordinate ranges over `{lb, lb + 1, cap}` where `lb` is its effective
    /// lower bound; tuples are raised to be non-decreasing, tuples breaking a
    /// pin are dropped, and duplicates removed. For graphs of diameter at
    /// most `cap`, values at or above `cap` all forbid reuse of a color, so
    /// these samples straddle every threshold such a graph can see.
    pub fn representatives(&self, k: usize, cap: u32) -> Result<Vec<PackingSequence>, PackingError> {
        assert!(k >= 1 && cap >= 1);
        let mut lower = Vec::with_capacity(k);
        let mut running = 1u32;
        for i in 0..k {
            if let Some(b) = self.bounds.get(i) {
                running = running.max(b.lower());
            }
            lower.push(running);
        }
        let choices: Vec<Vec<u32>> = (0..k)
            .map(|i| match self.bounds.get(i) {
                Some(Bound::Exact(p)) => vec![*p],
                _ => {
                    let lb = lower[i];
                    let mut c: Vec<u32> = [lb, lb + 1, cap].into_iter().filter(|&v| v >= lb).collect();
                    c.sort_unstable();
                    c.dedup();
                    c
                }
            })
            .collect();

        let mut out: Vec<PackingSequence> = Vec::new();
        let mut idx = vec![0usize; k];
        loop {
            let mut vals = Vec::with_capacity(k);
            let mut prev = 0;
            for i in 0..k {
                let v = choices[i][idx[i]].max(prev);
                vals.push(v);
                prev = v;
            }
            let seq = PackingSequence::new(vals, Extension::RepeatLast).expect("non-decreasing by construction");
            if self.contains(&seq) && !out.contains(&seq) {
                out.push(seq);
            }
            // odometer, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    if out.is_empty() {
                        return Err(PackingError::ClassEmpty(k));
                    }
                    return Ok(out);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S_{")?;
        for (i, b) in self.bounds.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match b {
                Bound::Exact(v) => write!(f, "{v}")?,
                Bound::AtLeast(v) => write!(f, "{v}bar")?,
            }
        }
        f.write_str("}")
    }
}

/// The three classes whose 4-critical graphs are characterized here; their
/// union is `{s_1 = 1, s_2 >= 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedClass {
    /// `s_1 = 1, s_2 >= 4`
    One4Bar,
    /// `s_1 = 1, s_2 = 3, s_3 >= 4`
    One3And4Bar,
    /// `s_1 = 1, s_2 = s_3 = 3`
    One3And3,
}

impl NamedClass {
    pub const ALL: [NamedClass; 3] = [NamedClass::One4Bar, NamedClass::One3And4Bar, NamedClass::One3And3];

    pub fn name(self) -> &'static str {
        match self {
            NamedClass::One4Bar => "S1-4bar",
            NamedClass::One3And4Bar => "S1-3-4bar",
            NamedClass::One3And3 => "S1-3-3",
        }
    }

    pub fn class(self) -> SequenceClass {
        use Bound::*;
        SequenceClass::new(match self {
            NamedClass::One4Bar => vec![Exact(1), AtLeast(4)],
            NamedClass::One3And4Bar => vec![Exact(1), Exact(3), AtLeast(4)],
            NamedClass::One3And3 => vec![Exact(1), Exact(3), Exact(3)],
        })
    }

    /// The class with `s_4` pinned, for the classes where the
    /// characterization depends on it.
    pub fn class_with_s4(self, s4: Option<u32>) -> SequenceClass {
        match (self, s4) {
            (NamedClass::One3And3, Some(s4)) => {
                use Bound::*;
                SequenceClass::new(vec![Exact(1), Exact(3), Exact(3), Exact(s4)])
            }
            _ => self.class(),
        }
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedClass {
    type Err = PackingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| PackingError::UnknownClass(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PackingSequence {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s = seq("1,3^2+");
        assert_eq!(s.values(), &[1, 3, 3]);
        assert_eq!(s.extension(), Extension::RepeatLast);
        assert_eq!(s.to_string(), "1,3^2+");
        assert_eq!(seq("1,4,4,4+").to_string(), "1,4^3+");
        assert_eq!(seq("1,2,3").extension(), Extension::Unbounded);
        assert!(matches!(
            "1,x".parse::<PackingSequence>(),
            Err(PackingError::Syntax { .. })
        ));
        assert!(matches!(
            "3,2".parse::<PackingSequence>(),
            Err(PackingError::Decreasing { .. })
        ));
        assert!(matches!(
            "0,2".parse::<PackingSequence>(),
            Err(PackingError::NonPositive(1))
        ));
        assert_eq!("+".parse::<PackingSequence>(), Err(PackingError::Empty));
    }

    #[test]
    fn value_at_resolves_tails() {
        assert_eq!(PackingSequence::packing().value_at(4), 4);
        assert_eq!(seq("1,3,3+").value_at(7), 3);
        assert!(seq("1,4!").value_at(3) > 64);
        assert_eq!(PackingSequence::proper().value_at(10), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&seq("1,3,4"), &seq("1,3,3")));
        let s = seq("1,3,4+");
        assert!(dominates(&s, &s));
        assert!(!dominates(&seq("1,2,3"), &seq("1,3,3")));
        // an unbounded tail dominates any repeating one, not conversely
        assert!(dominates(&seq("1,3!"), &seq("1,3+")));
        assert!(!dominates(&seq("1,3+"), &seq("1,3!")));
    }

    #[test]
    fn leading_ones() {
        assert_eq!(seq("1,4^3+").leading_ones(), Some(1));
        assert_eq!(seq("1,1,3,3+").leading_ones(), Some(2));
        assert_eq!(seq("2,3+").leading_ones(), Some(0));
        assert_eq!(PackingSequence::proper().leading_ones(), None);
        assert_eq!(seq("1!").leading_ones(), Some(1));
    }

    #[test]
    fn representatives_follow_the_sampling_rule() {
        use Bound::*;
        let c = SequenceClass::new(vec![Exact(1), AtLeast(3), Exact(3)]);
        let reps = c.representatives(4, 7).unwrap();
        assert!(reps.contains(&PackingSequence::repeating(&[1, 3, 3, 3]).unwrap()));
        assert!(reps.contains(&PackingSequence::repeating(&[1, 3, 3, 7]).unwrap()));
        assert_eq!(reps.len(), 3);

        let pinned = SequenceClass::new(vec![Exact(1), Exact(4), Exact(4), Exact(4)]);
        assert_eq!(pinned.representatives(4, 7).unwrap().len(), 1);

        let reps = NamedClass::One4Bar.class().representatives(4, 7).unwrap();
        assert!(reps.contains(&PackingSequence::repeating(&[1, 4, 4, 4]).unwrap()));
        assert!(reps.contains(&PackingSequence::repeating(&[1, 7, 7, 7]).unwrap()));
        // non-decreasing triples over {4, 5, 7}
        assert_eq!(reps.len(), 10);
        assert_eq!(NamedClass::One3And4Bar.class().representatives(4, 7).unwrap().len(), 6);
    }

    #[test]
    fn empty_class_is_an_error() {
        use Bound::*;
        let c = SequenceClass::new(vec![Exact(3), Exact(2)]);
        assert_eq!(c.representatives(3, 7), Err(PackingError::ClassEmpty(3)));
    }

    #[test]
    fn named_classes_parse() {
        assert_eq!("S1-3-4bar".parse::<NamedClass>().unwrap(), NamedClass::One3And4Bar);
        assert!("S2".parse::<NamedClass>().is_err());
        assert_eq!(NamedClass::One4Bar.class().to_string(), "S_{1,4bar}");
    }
}
