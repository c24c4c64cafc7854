//! Weighted tilings of an `n`-board by white squares (`a`), black squares
//! (`b`) and dominoes (`dd`).
//!
//! Under the weight `w` a white square is `x`, a black square at position
//! `i` is `q^i x` and a domino on `{i-1, i}` is `q^(i-1) s`. The weight
//! `w_r` puts an extra `r` on every black square. The circular weight `W`
//! gives a domino on `{i-1, i}` the weight `q^(i+1) s` for `i < n` and `qs`
//! at the end of the board.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Mono, QPoly, QRational, Rational, Var, XsPoly};
use crate::chebyshev::{t_quotient_coeff, u_coeff, ChebTables, GenUFamily};
use crate::error::{expect_eq, Error, Result};
use crate::qcomb::{binom2, QBinomialTable};

pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    White,
    Black,
    Domino,
    /// Weight-1 square; only appears in the `A` part of the Fischer map.
    Colorless,
}

impl Block {
    pub fn len(self) -> usize {
        if self == Block::Domino {
            2
        } else {
            1
        }
    }

    fn letters(self) -> &'static str {
        match self {
            Block::White => "a",
            Block::Black => "b",
            Block::Domino => "dd",
            Block::Colorless => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    blocks: Vec<Block>,
}

impl Tiling {
    pub fn new(blocks: Vec<Block>) -> Self {
        Self { blocks }
    }

    /// Parses a word in `a`, `b`, `c` and `dd`.
    pub fn from_word(word: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut chars = word.chars().peekable();
        while let Some(ch) = chars.next() {
            let b = match ch {
                'a' => Block::White,
                'b' => Block::Black,
                'c' => Block::Colorless,
                'd' if chars.next_if_eq(&'d').is_some() => Block::Domino,
                _ => return Err(Error::Config(format!("invalid tiling word {word:?}"))),
            };
            blocks.push(b);
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of cells covered.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn word(&self) -> String {
        self.blocks.iter().map(|b| b.letters()).collect()
    }

    /// `(block, first cell)` with 1-based cells.
    pub fn placed(&self) -> impl Iterator<Item = (Block, usize)> + '_ {
        self.blocks.iter().scan(1, |pos, &b| {
            let start = *pos;
            *pos += b.len();
            Some((b, start))
        })
    }

    pub fn count(&self, kind: Block) -> usize {
        self.blocks.iter().filter(|&&b| b == kind).count()
    }

    pub fn last(&self) -> Option<Block> {
        self.blocks.last().copied()
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Lexicographic enumeration (`a < b < d`) of the tilings of an `n`-board.
pub struct Tilings {
    n: usize,
    current: Option<Vec<Block>>,
}

impl Iterator for Tilings {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        let cur = self.current.take()?;
        let out = Tiling::new(cur.clone());
        self.current = successor(cur, self.n);
        Some(out)
    }
}

fn successor(mut blocks: Vec<Block>, n: usize) -> Option<Vec<Block>> {
    let mut used: usize = blocks.iter().map(|b| b.len()).sum();
    while let Some(last) = blocks.pop() {
        used -= last.len();
        let next = match last {
            Block::White => Some(Block::Black),
            Block::Black if n - used >= 2 => Some(Block::Domino),
            _ => None,
        };
        if let Some(b) = next {
            blocks.push(b);
            used += b.len();
            blocks.extend(std::iter::repeat_n(Block::White, n - used));
            return Some(blocks);
        }
    }
    None
}

pub fn enumerate(n: usize, cap: usize) -> Result<Tilings> {
    if n > cap {
        return Err(Error::OracleBound { n, cap });
    }
    Ok(Tilings {
        n,
        current: Some(vec![Block::White; n]),
    })
}

/// `c(n) = 2 c(n-1) + c(n-2)`, `c(0) = 1`, `c(1) = 2`.
pub fn tiling_count(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 2u64);
    for _ in 0..n {
        (a, b) = (b, 2 * b + a);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightSpec {
    W,
    Wr,
    WCircle,
}

/// Exponents of `q^e x^x s^s r^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
struct Exps {
    q: u32,
    mono: Mono,
}

fn weight_exps(t: &Tiling, spec: WeightSpec) -> Exps {
    let n = t.len();
    let mut e = Exps::default();
    for (b, start) in t.placed() {
        match b {
            Block::White => e.mono.x += 1,
            Block::Black => {
                e.q += start as u32;
                e.mono.x += 1;
                if spec == WeightSpec::Wr {
                    e.mono.r += 1;
                }
            }
            Block::Domino => {
                let i = start + 1;
                e.q += match spec {
                    WeightSpec::WCircle if i < n => i as u32 + 1,
                    WeightSpec::WCircle => 1,
                    _ => start as u32,
                };
                e.mono.s += 1;
            }
            Block::Colorless => {}
        }
    }
    e
}

pub fn weight(t: &Tiling, spec: WeightSpec) -> XsPoly {
    let e = weight_exps(t, spec);
    XsPoly::term(QRational::q_pow(e.q as i64), e.mono)
}

/// Integer-count accumulator for sums of monomial weights.
#[derive(Default)]
struct Acc(BTreeMap<Mono, BTreeMap<u32, u64>>);

impl Acc {
    fn add(&mut self, e: Exps) {
        *self.0.entry(e.mono).or_default().entry(e.q).or_default() += 1;
    }

    fn finish(self) -> XsPoly {
        XsPoly::from_terms(self.0.into_iter().map(|(m, qs)| {
            let p = qs.into_iter().fold(QPoly::zero(), |acc, (k, c)| {
                acc + QPoly::monomial(Rational::from_integer(BigInt::from(c)), k)
            });
            (m, QRational::from_poly(p))
        }))
    }
}

/// Sum of weights over the tilings accepted by `keep`.
pub fn weight_sum<F: Fn(&Tiling) -> bool>(n: usize, cap: usize, spec: WeightSpec, keep: F) -> Result<XsPoly> {
    let mut acc = Acc::default();
    for t in enumerate(n, cap)? {
        if keep(&t) {
            acc.add(weight_exps(&t, spec));
        }
    }
    Ok(acc.finish())
}

/// `w(V_n)` (or `w_r(V_n)`).
pub fn oracle_u_total(n: usize, spec: WeightSpec, cap: usize) -> Result<XsPoly> {
    weight_sum(n, cap, spec, |_| true)
}

/// `T_n` as the `w`-weight of the tilings not ending in a black square, or,
/// for [`WeightSpec::WCircle`], the `W`-weight of the tilings without a
/// black square at position `n`.
pub fn oracle_t_total(n: usize, spec: WeightSpec, cap: usize) -> Result<XsPoly> {
    weight_sum(n, cap, spec, |t| t.last() != Some(Block::Black))
}

/// Tilings with exactly `k` dominoes.
pub fn oracle_u(n: usize, k: usize, spec: WeightSpec, cap: usize) -> Result<XsPoly> {
    weight_sum(n, cap, spec, |t| t.count(Block::Domino) == k)
}

/// Tilings with exactly `k` dominoes whose last block is not black.
pub fn oracle_t(n: usize, k: usize, cap: usize) -> Result<XsPoly> {
    weight_sum(n, cap, WeightSpec::W, |t| {
        t.count(Block::Domino) == k && t.last() != Some(Block::Black)
    })
}

/// `w_r`-weight of the tilings with `k` dominoes and `l` black squares.
pub fn oracle_v(n: usize, k: usize, l: usize, cap: usize) -> Result<XsPoly> {
    weight_sum(n, cap, WeightSpec::Wr, |t| {
        t.count(Block::Domino) == k && t.count(Block::Black) == l
    })
}

/// `v(n,k,l,x) = q^(kl) s^k r^l x^(n-2k) q^(k^2) [n-k, k] q^C(l+1,2) [n-2k, l]`.
pub fn v_closed(b: &QBinomialTable, n: usize, k: usize, l: usize) -> XsPoly {
    if 2 * k > n || l > n - 2 * k {
        return XsPoly::zero();
    }
    let (ni, ki, li) = (n as i64, k as i64, l as i64);
    let c = QRational::from_poly(&b.get(ni - ki, ki) * &b.get(ni - 2 * ki, li))
        * QRational::q_pow(ki * li + ki * ki + binom2(li + 1));
    XsPoly::term(c, Mono::new((n - 2 * k) as u32, k as u32, l as u32))
}

/// The oracle against the closed form of `v` and against the factorisation
/// `v(n,k,l,x) = q^(kl) v(n,k,0,1) v(n-2k,0,l,x)`.
pub fn check_v(b: &QBinomialTable, n: usize, k: usize, l: usize, cap: usize) -> Result<()> {
    let got = oracle_v(n, k, l, cap)?;
    expect_eq(format!("v({n},{k},{l})"), &got, &v_closed(b, n, k, l))?;
    if 2 * k > n {
        return Ok(());
    }
    let left = oracle_v(n, k, 0, cap)?.subst_const(Var::X, &QRational::one());
    let right = oracle_v(n - 2 * k, 0, l, cap)?;
    let product = (left * right).scale(&QRational::q_pow((k * l) as i64));
    expect_eq(format!("v({n},{k},{l}) factorisation"), &got, &product)
}

/// The Fischer map: `T` reverses the order of the dominoes and black squares
/// (white squares keep their slots), `A` recolours the squares of `T` as
/// colourless, `B` deletes the dominoes of `T`.
pub fn fischer_map(t: &Tiling) -> (Tiling, Tiling, Tiling) {
    let mut moving: Vec<Block> = t.blocks.iter().copied().filter(|&b| b != Block::White).collect();
    let mut big_t = Vec::with_capacity(t.blocks.len());
    for &b in &t.blocks {
        big_t.push(if b == Block::White { b } else { moving.pop().expect("counted") });
    }
    let a = big_t
        .iter()
        .map(|&b| if b == Block::Domino { b } else { Block::Colorless })
        .collect();
    let bb = big_t.iter().copied().filter(|&b| b != Block::Domino).collect();
    (Tiling::new(big_t), Tiling::new(a), Tiling::new(bb))
}

/// `w_r(t) = q^(kl) w_r(A) w_r(B)`.
pub fn check_fischer(t: &Tiling) -> Result<()> {
    let (_, a, b) = fischer_map(t);
    let kl = (t.count(Block::Domino) * t.count(Block::Black)) as i64;
    let rhs = (weight(&a, WeightSpec::Wr) * weight(&b, WeightSpec::Wr)).scale(&QRational::q_pow(kl));
    expect_eq(format!("tiling {t}"), &weight(t, WeightSpec::Wr), &rhs)
}

/// The Fischer factorisation for every tiling of an `n`-board, plus injectivity of `t -> T` on
/// each `(k, l)` class and `T -> t` by applying the map again.
pub fn check_fischer_board(n: usize, cap: usize) -> Result<()> {
    let mut seen: HashSet<Tiling> = HashSet::new();
    for t in enumerate(n, cap)? {
        check_fischer(&t)?;
        let (big_t, _, _) = fischer_map(&t);
        if fischer_map(&big_t).0 != t {
            return Err(Error::mismatch(format!("Fischer map not invertible at {t}"), XsPoly::zero()));
        }
        if !seen.insert(big_t.clone()) {
            return Err(Error::mismatch(format!("Fischer map not injective at {t}"), XsPoly::zero()));
        }
    }
    Ok(())
}

/// All the oracle identities at one `n`: `U_n`, `U_n^(r)`, `T_n` in both
/// models, `u(n,k)` and `t(n,k)` against their closed forms, and the
/// partition sums.
pub fn check_oracles(tables: &ChebTables, gen: &GenUFamily, n: usize, cap: usize) -> Result<()> {
    let ni = n as i64;
    expect_eq(
        format!("w(V_{n})"),
        &oracle_u_total(n, WeightSpec::W, cap)?,
        tables.u.get(ni),
    )?;
    let total_r = oracle_u_total(n, WeightSpec::Wr, cap)?;
    expect_eq(format!("w_r(V_{n})"), &total_r, gen.get(ni))?;
    expect_eq(format!("T_{n} tilings"), &oracle_t_total(n, WeightSpec::W, cap)?, tables.t.get(ni))?;
    expect_eq(
        format!("T_{n} circular tilings"),
        &oracle_t_total(n, WeightSpec::WCircle, cap)?,
        tables.t.get(ni),
    )?;
    let mut sum_u = XsPoly::zero();
    for k in 0..=n / 2 {
        let u = oracle_u(n, k, WeightSpec::Wr, cap)?;
        expect_eq(format!("u({n},{k})"), &u, &u_coeff(&tables.binom, ni, k as i64))?;
        let mut sum_v = XsPoly::zero();
        for l in 0..=n - 2 * k {
            sum_v = sum_v + oracle_v(n, k, l, cap)?;
        }
        expect_eq(format!("sum over l of v({n},{k},l)"), &sum_v, &u)?;
        sum_u = sum_u + u;
        if n >= 1 {
            let t = oracle_t(n, k, cap)?;
            let closed = XsPoly::term(
                t_quotient_coeff(&tables.binom, n as u32, k as u32),
                Mono::xs((n - 2 * k) as u32, k as u32),
            );
            expect_eq(format!("t({n},{k})"), &t, &closed)?;
            let b = &tables.binom;
            let rec = u_coeff(b, ni - 1, k as i64).subst_const(Var::R, &QRational::one()) * XsPoly::x()
                + u_coeff(b, ni - 2, k as i64 - 1).subst_const(Var::R, &QRational::one())
                    * (XsPoly::q_pow(ni - 1) * XsPoly::s());
            expect_eq(format!("t({n},{k}) from u"), &t, &rec)?;
        }
    }
    expect_eq(format!("sum over k of u({n},k)"), &sum_u, &total_r)
}

/// A sample 11-board tiling with two dominoes and three black squares.
pub const EXAMPLE_WORD: &str = "abbddaddaab";

/// The tilings of a 2-board that begin with a white square or a domino do
/// not give `T_2`: their weight is `x^2 + q^2 x^2 + qs`.
pub fn t2_counterexample(cap: usize) -> Result<XsPoly> {
    weight_sum(2, cap, WeightSpec::W, |t| {
        matches!(t.blocks().first(), Some(Block::White | Block::Domino))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::gen_u_family;

    fn words(n: usize) -> Vec<String> {
        enumerate(n, DEFAULT_CAP).unwrap().map(|t| t.word()).collect()
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(words(0), [""]);
        assert_eq!(words(2), ["aa", "ab", "ba", "bb", "dd"]);
        for n in 0..=12 {
            assert_eq!(enumerate(n, DEFAULT_CAP).unwrap().count() as u64, tiling_count(n));
        }
        assert_eq!(tiling_count(5), 70);
        assert!(matches!(enumerate(17, 16), Err(Error::OracleBound { n: 17, cap: 16 })));
    }

    #[test]
    fn example_weights() {
        let t = Tiling::from_word(EXAMPLE_WORD).unwrap();
        assert_eq!(t.len(), 11);
        assert_eq!(weight(&t, WeightSpec::W).to_string(), "q^27*s^2*x^7");
        assert_eq!(weight(&t, WeightSpec::Wr).to_string(), "q^27*r^3*s^2*x^7");
        assert!(Tiling::from_word("abddadddaab").is_err());
        let dd = Tiling::from_word("dd").unwrap();
        assert_eq!(weight(&dd, WeightSpec::W).to_string(), "q*s");

        let (big_t, a, b) = fischer_map(&t);
        assert_eq!(big_t.word(), "abddddabaab");
        assert_eq!(a.word(), "ccddddccccc");
        assert_eq!(b.word(), "ababaab");
        assert_eq!(weight(&a, WeightSpec::Wr).to_string(), "q^8*s^2");
        assert_eq!(weight(&b, WeightSpec::Wr).to_string(), "q^13*r^3*x^7");
        check_fischer(&t).unwrap();
    }

    #[test]
    fn oracles_agree() {
        let tables = ChebTables::new(10);
        let gen = gen_u_family(10);
        for n in 0..=10 {
            check_oracles(&tables, &gen, n, DEFAULT_CAP).unwrap();
            check_fischer_board(n, DEFAULT_CAP).unwrap();
        }
        assert_eq!(
            oracle_u_total(2, WeightSpec::W, 16).unwrap().to_string(),
            "(1+q+q^2+q^3)*x^2 + q*s"
        );
        assert_eq!(oracle_t(4, 2, 16).unwrap().to_string(), "q^4*s^2");
        assert_eq!(oracle_u(4, 2, WeightSpec::W, 16).unwrap().to_string(), "q^4*s^2");
        let cex = t2_counterexample(16).unwrap();
        assert_eq!(cex.to_string(), "(1+q^2)*x^2 + q*s");
        assert_ne!(&cex, tables.t.get(2));
    }

    #[test]
    fn v_identity() {
        let b = QBinomialTable::new(12);
        for n in 0..=8 {
            for k in 0..=n / 2 {
                for l in 0..=n - 2 * k {
                    check_v(&b, n, k, l, DEFAULT_CAP).unwrap();
                }
            }
        }
    }
}
