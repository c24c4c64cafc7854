//! Tables and sequences shared by the checks, built on first use.

use std::sync::OnceLock;

use super::{Suite, VerifyConfig};
use crate::algebra::{Mono, QRational, XsPoly};
use crate::chebyshev::{gen_u_family, ChebTables, GenUFamily};
use crate::error::Result;
use crate::tangent::{genocchi_from_tangent, q_tangent, QGenocchiSeq, QTangentSeq, SeidelTriangle, XOne};

pub struct Data {
    max_n: Vec<(Suite, usize)>,
    pub oracle_cap: usize,
    inject_fault: bool,
    table_n: usize,
    tables: OnceLock<ChebTables>,
    one: OnceLock<XOne>,
    gen_u: OnceLock<GenUFamily>,
    tangent: OnceLock<Result<QTangentSeq>>,
    genocchi: OnceLock<Result<QGenocchiSeq>>,
    triangle: OnceLock<SeidelTriangle>,
}

/// Largest `n + m` in the shift identities.
pub const SHIFT_BOUND: usize = 10;

impl Data {
    pub fn new(config: &VerifyConfig) -> Self {
        let max_n: Vec<(Suite, usize)> = super::Suite::ALL.into_iter().map(|s| (s, config.max_n(s))).collect();
        let get = |s: Suite| max_n.iter().find(|(x, _)| *x == s).map(|(_, n)| *n).unwrap_or(0);
        let mut table_n = 12;
        for &s in &config.suites {
            let need = match s {
                Suite::Chebyshev => get(s) + 1,
                Suite::Tilings => get(s) + 1,
                Suite::Moments => get(s) + 2,
                Suite::TangentGenocchi => (2 * get(s) + 3).max(2 * SHIFT_BOUND),
                Suite::Q1Classical => (get(s) + 2).max(2 * SHIFT_BOUND),
            };
            table_n = table_n.max(need);
        }
        Self {
            max_n,
            oracle_cap: config.oracle_cap,
            inject_fault: config.inject_fault,
            table_n,
            tables: OnceLock::new(),
            one: OnceLock::new(),
            gen_u: OnceLock::new(),
            tangent: OnceLock::new(),
            genocchi: OnceLock::new(),
            triangle: OnceLock::new(),
        }
    }

    pub fn max_n(&self, suite: Suite) -> usize {
        self.max_n.iter().find(|(s, _)| *s == suite).map(|(_, n)| *n).unwrap_or(0)
    }

    /// `T` and `U` up to the largest index any selected check touches.
    pub fn tables(&self) -> &ChebTables {
        self.tables.get_or_init(|| {
            let mut tables = ChebTables::new(self.table_n);
            if self.inject_fault {
                let bumped = tables.t.get(5) + &XsPoly::term(QRational::one(), Mono::xs(5, 0));
                tables.t.replace(5, bumped);
            }
            tables
        })
    }

    pub fn one(&self) -> &XOne {
        self.one.get_or_init(|| XOne::new(self.tables()))
    }

    pub fn gen_u(&self) -> &GenUFamily {
        self.gen_u
            .get_or_init(|| gen_u_family(self.max_n(Suite::Chebyshev).max(self.max_n(Suite::Tilings))))
    }

    /// Number of Genocchi values `G_2 .. G_{2N}` the tangent checks use.
    pub fn genocchi_n(&self) -> usize {
        self.max_n(Suite::TangentGenocchi).max(1)
    }

    /// `t_1 .. t_{2N+1}`.
    pub fn tangent(&self) -> Result<&QTangentSeq> {
        self.tangent
            .get_or_init(|| q_tangent(self.genocchi_n()))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `G_2 .. G_{2N+2}`, by the tangent route.
    pub fn genocchi(&self) -> Result<&QGenocchiSeq> {
        self.genocchi
            .get_or_init(|| self.tangent().map(genocchi_from_tangent))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Rows `0 ..= 2N+1`.
    pub fn triangle(&self) -> &SeidelTriangle {
        self.triangle
            .get_or_init(|| SeidelTriangle::build(2 * self.genocchi_n() + 1))
    }
}
