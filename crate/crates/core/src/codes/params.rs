use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::decimal;
use crate::error::{Error, Result};
use crate::locality::{default_delta, locate_syndromes, recover_syndromes, retrieve_syndromes};
use crate::perm::{factorial, sig, MultiplicityVector};
use crate::channel::parity_vector;
use crate::vt::{vt_syndrome, weight};

/// Syndrome values of a word under one code's constraints. Unused groups are
/// left empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SyndromeTuple {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", with = "decimal::list")]
    pub d: Vec<BigUint>,
}

impl fmt::Display for SyndromeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut group = |f: &mut fmt::Formatter<'_>, name: &str, vals: Vec<String>| -> fmt::Result {
            if vals.is_empty() {
                return Ok(());
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}=({})", name, vals.join(","))
        };
        group(f, "a", self.a.iter().map(u64::to_string).collect())?;
        group(f, "b", self.b.iter().map(u64::to_string).collect())?;
        group(f, "c", self.c.iter().map(u64::to_string).collect())?;
        group(f, "d", self.d.iter().map(BigUint::to_string).collect())
    }
}

pub(crate) fn first_row(x: &[u32], s: usize) -> Vec<u32> {
    x.iter().step_by(s).copied().collect()
}

/// Checks that `word` has length `n` and is an arrangement of `multiset`
/// (ascending).
pub(crate) fn check_word(word: &[u32], multiset: &[u32]) -> Result<()> {
    let mut w = word.to_vec();
    w.sort_unstable();
    if w != multiset {
        return Err(Error::invalid(format!(
            "word of length {} is not an arrangement of the code's multiset",
            word.len()
        )));
    }
    Ok(())
}

fn check_residue(v: u64, m: u64, name: &str) -> Result<()> {
    if v >= m {
        return Err(Error::invalid(format!("{} = {} outside Z_{}", name, v, m)));
    }
    Ok(())
}

fn check_factorial_residue(v: &BigUint, g2: usize, name: &str) -> Result<()> {
    if *v >= factorial(g2) {
        return Err(Error::invalid(format!("{} outside Z_({}!)", name, g2)));
    }
    Ok(())
}

fn check_fixed_shape(n: usize, s: usize, p: usize) -> Result<()> {
    if s == 0 || p < 2 {
        return Err(Error::invalid("need s >= 1 and P >= 2"));
    }
    if !n.is_multiple_of(2 * p * s) {
        return Err(Error::shape(format!("2Ps = {} must divide n = {}", 2 * p * s, n)));
    }
    Ok(())
}

fn check_group(n: usize, g: usize) -> Result<()> {
    if !n.is_multiple_of(g) || !(n / g).is_multiple_of(2) {
        return Err(Error::shape(format!(
            "n = {} must be an even multiple of the column height {}",
            n, g
        )));
    }
    Ok(())
}

fn resolve_multiplicity(n: usize, r: usize, explicit: &Option<Vec<usize>>) -> Result<MultiplicityVector> {
    let m = match explicit {
        Some(v) => MultiplicityVector::new(v.clone())?,
        None => {
            if r == 0 || !n.is_multiple_of(r) {
                return Err(Error::invalid(format!("r = {} must divide n = {}", r, n)));
            }
            MultiplicityVector::regular(r, n / r)?
        }
    };
    if m.n() != n {
        return Err(Error::invalid(format!("multiplicities sum to {}, not n = {}", m.n(), n)));
    }
    if m.max() != r {
        return Err(Error::invalid(format!(
            "r = {} must equal the largest multiplicity {}",
            r,
            m.max()
        )));
    }
    Ok(m)
}

/// Parameters of the fixed-burst permutation code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cs1Params {
    pub n: usize,
    pub s: usize,
    #[serde(rename = "P")]
    pub p: usize,
    pub a: u64,
    pub c: [u64; 2],
    #[serde(with = "decimal::pair")]
    pub d: [BigUint; 2],
}

impl Cs1Params {
    pub fn validate(&self) -> Result<()> {
        check_fixed_shape(self.n, self.s, self.p)?;
        check_residue(self.a, (self.n / self.s) as u64, "a")?;
        for &c in &self.c {
            check_residue(c, (2 * self.p * self.s) as u64, "c")?;
        }
        for d in &self.d {
            check_factorial_residue(d, 2 * self.s, "d")?;
        }
        Ok(())
    }

    /// The parameters whose syndrome targets are those of `sigma`.
    pub fn for_word(sigma: &[u32], s: usize, p: usize) -> Result<Self> {
        let n = sigma.len();
        check_fixed_shape(n, s, p)?;
        let t = (n / s) as u64;
        let a = vt_syndrome(&sig(&first_row(sigma, s))) % t;
        let (c1, c2) = retrieve_syndromes(sigma, s, p)?;
        let (d1, d2) = recover_syndromes(sigma, s)?;
        Ok(Cs1Params { n, s, p, a, c: [c1, c2], d: [d1, d2] })
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: vec![self.a],
            b: vec![],
            c: self.c.to_vec(),
            d: self.d.to_vec(),
        }
    }

    pub fn multiset(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }
}

/// Parameters of the fixed-burst multi-permutation code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cs2Params {
    pub n: usize,
    pub s: usize,
    #[serde(rename = "P")]
    pub p: usize,
    /// Largest multiplicity; every symbol occurs `r` times unless
    /// `multiplicity` says otherwise.
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<usize>>,
    pub a: u64,
    pub c: [u64; 2],
    #[serde(with = "decimal::pair")]
    pub d: [BigUint; 2],
}

impl Cs2Params {
    pub fn group(&self) -> usize {
        self.s * (self.r + 1)
    }

    pub fn multiplicity_vector(&self) -> Result<MultiplicityVector> {
        resolve_multiplicity(self.n, self.r, &self.multiplicity)
    }

    pub fn validate(&self) -> Result<()> {
        check_fixed_shape(self.n, self.s, self.p)?;
        self.multiplicity_vector()?;
        check_group(self.n, self.group())?;
        check_residue(self.a, (self.n / self.s) as u64, "a")?;
        for &c in &self.c {
            check_residue(c, (2 * self.p * self.s) as u64, "c")?;
        }
        for d in &self.d {
            check_factorial_residue(d, 2 * self.group(), "d")?;
        }
        Ok(())
    }

    pub fn for_word(
        word: &[u32],
        s: usize,
        p: usize,
        r: usize,
        multiplicity: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = word.len();
        check_fixed_shape(n, s, p)?;
        let g = s * (r + 1);
        check_group(n, g)?;
        let t = (n / s) as u64;
        let a = vt_syndrome(&sig(&first_row(word, s))) % t;
        let (c1, c2) = retrieve_syndromes(word, s, p)?;
        let (d1, d2) = recover_syndromes(word, g)?;
        Ok(Cs2Params { n, s, p, r, multiplicity, a, c: [c1, c2], d: [d1, d2] })
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: vec![self.a],
            b: vec![],
            c: self.c.to_vec(),
            d: self.d.to_vec(),
        }
    }
}

/// Parameters of the first-row SVT codes. Without `multiplicity` the code is
/// over permutations; with it, over the corresponding multi-permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsvtParams {
    pub n: usize,
    pub s: usize,
    #[serde(rename = "P")]
    pub p: usize,
    pub b: [u64; 2],
    pub c: [u64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<usize>>,
}

impl PsvtParams {
    pub fn validate(&self) -> Result<()> {
        check_fixed_shape(self.n, self.s, self.p)?;
        if let Some(m) = &self.multiplicity {
            let m = MultiplicityVector::new(m.clone())?;
            if m.n() != self.n {
                return Err(Error::invalid("multiplicities must sum to n"));
            }
        }
        check_residue(self.b[0], self.p as u64, "b1")?;
        check_residue(self.b[1], 2, "b2")?;
        for &c in &self.c {
            check_residue(c, (2 * self.p * self.s) as u64, "c")?;
        }
        Ok(())
    }

    pub fn for_word(word: &[u32], s: usize, p: usize, multiplicity: Option<Vec<usize>>) -> Result<Self> {
        let n = word.len();
        check_fixed_shape(n, s, p)?;
        let (b, c) = psvt_syndromes(word, s, p)?;
        Ok(PsvtParams { n, s, p, b, c, multiplicity })
    }

    pub fn multiset(&self) -> Result<Vec<u32>> {
        match &self.multiplicity {
            Some(m) => Ok(MultiplicityVector::new(m.clone())?.multiset()),
            None => Ok((1..=self.n as u32).collect()),
        }
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: vec![],
            b: self.b.to_vec(),
            c: self.c.to_vec(),
            d: vec![],
        }
    }
}

pub(crate) fn psvt_syndromes(word: &[u32], s: usize, p: usize) -> Result<([u64; 2], [u64; 2])> {
    let row_sig = sig(&first_row(word, s));
    let b = [vt_syndrome(&row_sig) % p as u64, weight(&row_sig) % 2];
    let (c1, c2) = retrieve_syndromes(word, s, p)?;
    Ok((b, [c1, c2]))
}

/// Shape of a variable-burst code with defaults resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VarShape {
    pub n: usize,
    pub s: usize,
    pub delta: usize,
    /// `p[s' - 1]` is the window used for bursts of length `s'`.
    pub p: Vec<usize>,
    pub g: usize,
}

impl VarShape {
    pub fn resolve(n: usize, s: usize, delta: Option<usize>, p: &Option<Vec<usize>>, g: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("need s >= 1"));
        }
        let delta = delta.unwrap_or_else(|| default_delta(n, s));
        if delta <= 2 * s {
            return Err(Error::invalid(format!("delta = {} must exceed 2s = {}", delta, 2 * s)));
        }
        let floor: Vec<usize> = (1..=s).map(|k| (delta + k - 1).div_ceil(k)).collect();
        let p = match p {
            Some(v) => {
                if v.len() != s {
                    return Err(Error::invalid(format!("P needs {} entries, one per burst length", s)));
                }
                for (k, (&got, &min)) in v.iter().zip(&floor).enumerate() {
                    if got < min {
                        return Err(Error::invalid(format!(
                            "P_{} = {} is below ceil((delta + {}) / {}) = {}",
                            k + 1,
                            got,
                            k,
                            k + 1,
                            min
                        )));
                    }
                }
                v.clone()
            }
            None => floor,
        };
        if !n.is_multiple_of(s) || !(n / s).is_multiple_of(2) {
            return Err(Error::shape(format!("n / s must be an even integer (n = {}, s = {})", n, s)));
        }
        for k in 2..=s {
            let unit = 2 * k * p[k - 1];
            if !n.is_multiple_of(unit) {
                return Err(Error::shape(format!(
                    "2 * {} * P_{} = {} must divide n = {}",
                    k, k, unit, n
                )));
            }
        }
        check_group(n, g)?;
        Ok(VarShape { n, s, delta, p, g })
    }

    pub fn syndromes_of(&self, word: &[u32]) -> Result<SyndromeTuple> {
        if word.len() != self.n {
            return Err(Error::invalid(format!("word length {} differs from n = {}", word.len(), self.n)));
        }
        let (a1, a2) = locate_syndromes(&parity_vector(word), self.s);
        let full_sig = sig(word);
        let mut b = vec![vt_syndrome(&full_sig) % self.p[0] as u64, weight(&full_sig) % 2];
        let mut c = Vec::new();
        for k in 2..=self.s {
            let (bk, ck) = psvt_syndromes(word, k, self.p[k - 1])?;
            b.extend_from_slice(&bk);
            c.extend_from_slice(&ck);
        }
        let (d1, d2) = recover_syndromes(word, self.g)?;
        Ok(SyndromeTuple { a: vec![a1, a2], b, c, d: vec![d1, d2] })
    }

    pub fn check_targets(&self, a: &[u64; 2], b: &[u64], c: &[u64], d: &[BigUint; 2]) -> Result<()> {
        check_residue(a[0], 4, "a1")?;
        check_residue(a[1], 2 * self.n as u64, "a2")?;
        if b.len() != 2 * self.s || c.len() != 2 * self.s - 2 {
            return Err(Error::invalid(format!(
                "need {} b values and {} c values",
                2 * self.s,
                2 * self.s - 2
            )));
        }
        for k in 1..=self.s {
            check_residue(b[2 * k - 2], self.p[k - 1] as u64, "b")?;
            check_residue(b[2 * k - 1], 2, "b")?;
        }
        for k in 2..=self.s {
            let m = (2 * k * self.p[k - 1]) as u64;
            check_residue(c[2 * k - 4], m, "c")?;
            check_residue(c[2 * k - 3], m, "c")?;
        }
        for x in d {
            check_factorial_residue(x, 2 * self.g, "d")?;
        }
        Ok(())
    }
}

/// Parameters of the variable-burst permutation code. `delta` and `P`
/// (one window per burst length) default to their formulas when omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cs3Params {
    pub n: usize,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(default, rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<usize>>,
    pub a: [u64; 2],
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    #[serde(with = "decimal::pair")]
    pub d: [BigUint; 2],
}

impl Cs3Params {
    pub(crate) fn shape(&self) -> Result<VarShape> {
        VarShape::resolve(self.n, self.s, self.delta, &self.p, 2 * self.s)
    }

    pub fn validate(&self) -> Result<()> {
        self.shape()?.check_targets(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn for_word(sigma: &[u32], s: usize, delta: Option<usize>, p: Option<Vec<usize>>) -> Result<Self> {
        let n = sigma.len();
        let shape = VarShape::resolve(n, s, delta, &p, 2 * s)?;
        let t = shape.syndromes_of(sigma)?;
        Ok(Cs3Params {
            n,
            s,
            delta,
            p,
            a: [t.a[0], t.a[1]],
            b: t.b,
            c: t.c,
            d: [t.d[0].clone(), t.d[1].clone()],
        })
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: self.a.to_vec(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.to_vec(),
        }
    }
}

/// Parameters of the variable-burst multi-permutation code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cs4Params {
    pub n: usize,
    pub s: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(default, rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<usize>>,
    pub a: [u64; 2],
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    #[serde(with = "decimal::pair")]
    pub d: [BigUint; 2],
}

impl Cs4Params {
    pub(crate) fn shape(&self) -> Result<VarShape> {
        VarShape::resolve(self.n, self.s, self.delta, &self.p, self.s * (self.r + 1))
    }

    pub fn multiplicity_vector(&self) -> Result<MultiplicityVector> {
        resolve_multiplicity(self.n, self.r, &self.multiplicity)
    }

    pub fn validate(&self) -> Result<()> {
        self.multiplicity_vector()?;
        self.shape()?.check_targets(&self.a, &self.b, &self.c, &self.d)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn for_word(
        word: &[u32],
        s: usize,
        r: usize,
        multiplicity: Option<Vec<usize>>,
        delta: Option<usize>,
        p: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = word.len();
        let shape = VarShape::resolve(n, s, delta, &p, s * (r + 1))?;
        let t = shape.syndromes_of(word)?;
        Ok(Cs4Params {
            n,
            s,
            r,
            multiplicity,
            delta,
            p,
            a: [t.a[0], t.a[1]],
            b: t.b,
            c: t.c,
            d: [t.d[0].clone(), t.d[1].clone()],
        })
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        SyndromeTuple {
            a: self.a.to_vec(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.to_vec(),
        }
    }
}

/// Any of the supported codes, tagged by `"code"` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "lowercase")]
pub enum CodeParams {
    Cs1(Cs1Params),
    Cs2(Cs2Params),
    Psvt(PsvtParams),
    Mpsvt(PsvtParams),
    Cs3(Cs3Params),
    Cs4(Cs4Params),
}

impl CodeParams {
    pub fn id(&self) -> &'static str {
        match self {
            CodeParams::Cs1(_) => "cs1",
            CodeParams::Cs2(_) => "cs2",
            CodeParams::Psvt(_) => "psvt",
            CodeParams::Mpsvt(_) => "mpsvt",
            CodeParams::Cs3(_) => "cs3",
            CodeParams::Cs4(_) => "cs4",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeParams::Cs1(p) => p.n,
            CodeParams::Cs2(p) => p.n,
            CodeParams::Psvt(p) | CodeParams::Mpsvt(p) => p.n,
            CodeParams::Cs3(p) => p.n,
            CodeParams::Cs4(p) => p.n,
        }
    }

    /// Largest burst length the code is built for.
    pub fn s(&self) -> usize {
        match self {
            CodeParams::Cs1(p) => p.s,
            CodeParams::Cs2(p) => p.s,
            CodeParams::Psvt(p) | CodeParams::Mpsvt(p) => p.s,
            CodeParams::Cs3(p) => p.s,
            CodeParams::Cs4(p) => p.s,
        }
    }

    /// True when the code corrects every burst length from 1 to `s`.
    pub fn variable_length(&self) -> bool {
        matches!(self, CodeParams::Cs3(_) | CodeParams::Cs4(_))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CodeParams::Cs1(p) => p.validate(),
            CodeParams::Cs2(p) => p.validate(),
            CodeParams::Psvt(p) => {
                if p.multiplicity.is_some() {
                    return Err(Error::invalid("psvt is over permutations; use mpsvt"));
                }
                p.validate()
            }
            CodeParams::Mpsvt(p) => {
                if p.multiplicity.is_none() {
                    return Err(Error::invalid("mpsvt needs a multiplicity vector"));
                }
                p.validate()
            }
            CodeParams::Cs3(p) => p.validate(),
            CodeParams::Cs4(p) => p.validate(),
        }
    }

    /// Ascending multiset of entries of every codeword.
    pub fn multiset(&self) -> Result<Vec<u32>> {
        match self {
            CodeParams::Cs1(p) => Ok(p.multiset()),
            CodeParams::Cs2(p) => Ok(p.multiplicity_vector()?.multiset()),
            CodeParams::Psvt(p) | CodeParams::Mpsvt(p) => p.multiset(),
            CodeParams::Cs3(p) => Ok((1..=p.n as u32).collect()),
            CodeParams::Cs4(p) => Ok(p.multiplicity_vector()?.multiset()),
        }
    }

    pub fn syndromes(&self) -> SyndromeTuple {
        match self {
            CodeParams::Cs1(p) => p.syndromes(),
            CodeParams::Cs2(p) => p.syndromes(),
            CodeParams::Psvt(p) | CodeParams::Mpsvt(p) => p.syndromes(),
            CodeParams::Cs3(p) => p.syndromes(),
            CodeParams::Cs4(p) => p.syndromes(),
        }
    }

    /// Same code shape, with the syndrome targets of `word`.
    pub fn with_syndromes_of(&self, word: &[u32]) -> Result<CodeParams> {
        if word.len() != self.n() {
            return Err(Error::invalid(format!(
                "word length {} differs from n = {}",
                word.len(),
                self.n()
            )));
        }
        Ok(match self {
            CodeParams::Cs1(p) => CodeParams::Cs1(Cs1Params::for_word(word, p.s, p.p)?),
            CodeParams::Cs2(p) => CodeParams::Cs2(Cs2Params::for_word(
                word,
                p.s,
                p.p,
                p.r,
                p.multiplicity.clone(),
            )?),
            CodeParams::Psvt(p) => CodeParams::Psvt(PsvtParams::for_word(word, p.s, p.p, None)?),
            CodeParams::Mpsvt(p) => {
                CodeParams::Mpsvt(PsvtParams::for_word(word, p.s, p.p, p.multiplicity.clone())?)
            }
            CodeParams::Cs3(p) => CodeParams::Cs3(Cs3Params::for_word(word, p.s, p.delta, p.p.clone())?),
            CodeParams::Cs4(p) => CodeParams::Cs4(Cs4Params::for_word(
                word,
                p.s,
                p.r,
                p.multiplicity.clone(),
                p.delta,
                p.p.clone(),
            )?),
        })
    }

    /// The same code with its first signature target moved to the next
    /// residue. Decoding with these parameters is a negative control.
    pub fn perturbed(&self) -> CodeParams {
        let mut out = self.clone();
        match &mut out {
            CodeParams::Cs1(p) => p.a = (p.a + 1) % (p.n / p.s) as u64,
            CodeParams::Cs2(p) => p.a = (p.a + 1) % (p.n / p.s) as u64,
            CodeParams::Psvt(p) | CodeParams::Mpsvt(p) => p.b[0] = (p.b[0] + 1) % p.p as u64,
            CodeParams::Cs3(p) => p.a[1] = (p.a[1] + 1) % (2 * p.n) as u64,
            CodeParams::Cs4(p) => p.a[1] = (p.a[1] + 1) % (2 * p.n) as u64,
        }
        out
    }

    /// Syndromes of `word` under this code's shape.
    pub fn syndromes_of(&self, word: &[u32]) -> Result<SyndromeTuple> {
        Ok(self.with_syndromes_of(word)?.syndromes())
    }

    pub fn member(&self, word: &[u32]) -> Result<bool> {
        match self {
            CodeParams::Cs1(p) => super::cs1_member(word, p),
            CodeParams::Cs2(p) => super::cs2_member(word, p),
            CodeParams::Psvt(p) => super::psvt_member(word, p),
            CodeParams::Mpsvt(p) => super::mpsvt_member(word, p),
            CodeParams::Cs3(p) => super::cs3_member(word, p),
            CodeParams::Cs4(p) => super::cs4_member(word, p),
        }
    }

    /// Decodes a received word. The first-row SVT codes need a localization
    /// interval and are decoded through their own functions instead.
    pub fn decode(&self, received: &[u32]) -> Result<Vec<u32>> {
        match self {
            CodeParams::Cs1(p) => super::cs1_decode(received, p).map(|w| w.into_vec()),
            CodeParams::Cs2(p) => super::cs2_decode(received, p).map(|w| w.into_vec()),
            CodeParams::Psvt(_) | CodeParams::Mpsvt(_) => Err(Error::invalid(
                "first-row SVT codes decode only with a localization interval",
            )),
            CodeParams::Cs3(p) => super::cs3_decode(received, p).map(|w| w.into_vec()),
            CodeParams::Cs4(p) => super::cs4_decode(received, p).map(|w| w.into_vec()),
        }
    }
}
