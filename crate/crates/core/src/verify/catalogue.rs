//! The identity catalogue, suite by suite.

use std::sync::OnceLock;

use super::data::SHIFT_BOUND;
use super::{Data, Entry, Job, Param, Suite, Sweep};
use crate::algebra::{Mono, QRational, Rational, Var, XsPoly};
use crate::chebyshev::{
    addition_formula, at_q1, check_classical_recurrence, check_commuting_factors, check_eta_pair,
    check_transfer_product, cheb_closed, cheb_det, classical_det, gen_u_at_r1, inverse_q_check, operator_product,
    p_n_binomial, pell_classical, pell_identity, q_binomial_x2_expansion, q_minus_one_degeneration,
    r_product_expansion, sqrt_pair_classical, t_quotient_coeff, binomial_sum_j_range, binomial_sum_product,
    binomial_sum_quotient, u_coeff, u_coeff_recurrence, ClosedForm, InverseOrder, Kind, Mixed, SpecialValue,
    TransferMatrix,
};
use crate::classical;
use crate::error::{expect_eq, Error, Result};
use crate::moments::{
    apply_functional, check_bridge_on_u, check_defining, check_favard, check_hankel, check_orthogonality,
    check_xn_tn, classical_moment, expand_monomial, expected_classical_moment, favard_triangle, monic_params,
    moment, moment_m_printed, moment_pochhammer, Functional, MomentTriangle,
};
use crate::qcomb::{
    q_binomial_theorem_sum, q_pochhammer_poly, q_int, rogers_product, verify_fib_inversion, verify_luc_inversion,
    QBinomialTable,
};
use crate::tangent::{
    bracket_replacement, check_genocchi_series, check_lambda, check_mu, check_palindrome, check_quotient,
    check_reflection, check_t_odd_shift, check_triangle_part, check_w_recursion, classical_genocchi, classical_seidel,
    classical_series, classical_shift, classical_t_odd, classical_tangent_genocchi, classical_tangent_recurrence,
    classical_tangents, classical_u_odd, expand_t_odd, expand_u_odd, integral_genocchi, neg_q_poch,
    parity_quotient_s0, product_form, q_seidel, raw_series, series_eq, shift_identity, shift_sides,
    t_odd_coeff, t_shift_corollary, tangent_recurrence, tanh_q, u_odd_display, BasisFunctional, SeriesKind,
    TrianglePart,
};
use crate::tiling::{
    check_fischer_board, check_v, enumerate, oracle_t, oracle_t_total, oracle_u, oracle_u_total, t2_counterexample,
    tiling_count, weight, Tiling, WeightSpec, EXAMPLE_WORD,
};

pub(super) fn push_suite<'a>(d: &'a Data, suite: Suite, out: &mut Vec<Entry<'a>>) {
    let mut c = Catalogue { suite, out };
    match suite {
        Suite::Chebyshev => chebyshev(d, &mut c),
        Suite::Tilings => tilings(d, &mut c),
        Suite::Moments => moments(d, &mut c),
        Suite::TangentGenocchi => tangent(d, &mut c),
        Suite::Q1Classical => q1_classical(d, &mut c),
    }
}

struct Catalogue<'a, 'o> {
    suite: Suite,
    out: &'o mut Vec<Entry<'a>>,
}

impl<'a> Catalogue<'a, '_> {
    fn holds<F>(&mut self, id: &'static str, bound: String, params: Vec<Param>, f: F) -> &mut Self
    where
        F: Fn(i64, Option<i64>) -> Result<()> + Send + Sync + 'a,
    {
        self.out.push(Entry {
            id,
            suite: self.suite,
            bound,
            job: Job::Holds(Sweep::new(params, f)),
            note: None,
        });
        self
    }

    /// Attaches a note to the entry pushed last.
    fn note(&mut self, note: &'static str) -> &mut Self {
        if let Some(e) = self.out.last_mut() {
            e.note = Some(note);
        }
        self
    }

    fn erratum(&mut self, id: &'static str, bound: String, printed: Sweep<'a>, corrected: Sweep<'a>) -> &mut Self {
        self.out.push(Entry {
            id,
            suite: self.suite,
            bound,
            job: Job::Erratum { printed, corrected },
            note: None,
        });
        self
    }
}

fn ns(lo: i64, hi: i64) -> Vec<Param> {
    (lo..=hi).map(|n| (n, None)).collect()
}

fn once(n: i64) -> Vec<Param> {
    vec![(n, None)]
}

/// `(n, m)` with `n >= lo`, `m >= 0` and `n + m <= bound`.
fn pairs(lo: i64, bound: i64) -> Vec<Param> {
    (lo..=bound).flat_map(|n| (0..=bound - n).map(move |m| (n, Some(m)))).collect()
}

/// `(n, m)` with `m, n <= hi`.
fn grid(hi: i64) -> Vec<Param> {
    (0..=hi).flat_map(|n| (0..=hi).map(move |m| (n, Some(m)))).collect()
}

/// `(n, k)` with `k <= n/2`.
fn half(lo: i64, hi: i64) -> Vec<Param> {
    (lo..=hi).flat_map(|n| (0..=n / 2).map(move |k| (n, Some(k)))).collect()
}

fn upto(lo: i64, hi: i64) -> String {
    if lo == 0 {
        format!("n <= {hi}")
    } else {
        format!("{lo} <= n <= {hi}")
    }
}

fn konst(c: QRational) -> XsPoly {
    XsPoly::constant(c)
}

fn rat_poly(c: &Rational) -> XsPoly {
    XsPoly::constant(QRational::from_rational(c.clone()))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn m_of(m: Option<i64>) -> i64 {
    m.expect("two-parameter check")
}

fn chebyshev<'a>(d: &'a Data, c: &mut Catalogue<'a, '_>) {
    let n = d.max_n(Suite::Chebyshev) as i64;
    let all = upto(0, n);
    let tb = move || d.tables();
    let b = move || &d.tables().binom;

    c.holds("(2.1)", all.clone(), once(n), |n, _| QBinomialTable::new(n as u32).check_recurrences());
    c.holds("(2.2)", all.clone(), ns(0, n), move |k, _| {
        let k = k as u32;
        expect_eq(
            format!("(x; q)_{k}"),
            &q_pochhammer_poly(Var::X, k),
            &q_binomial_theorem_sum(b(), Var::X, k),
        )
    });
    c.holds("(2.3)", all.clone(), ns(0, n), |k, _| rogers_product(k as u32).map(drop));
    c.holds("(2.4)", all.clone(), ns(0, n), move |k, _| verify_luc_inversion(b(), k as u32));
    c.holds("(2.5)", all.clone(), ns(0, n), move |k, _| verify_fib_inversion(b(), k as u32));

    for kind in [Kind::T, Kind::U] {
        let id = if kind == Kind::T { "(2.6)" } else { "(2.12)" };
        c.holds(id, all.clone(), ns(0, n), move |k, _| {
            let f = tb().family(kind);
            f.check_recurrence(k as usize)?;
            f.check_shape(k as usize)
        });
        let id = if kind == Kind::T { "Prop. 2.1 (det)" } else { "Prop. 2.2 (det)" };
        c.holds(id, all.clone(), ns(0, n), move |k, _| {
            expect_eq(format!("{kind}_{k} determinant"), &cheb_det(kind, k as usize), tb().family(kind).get(k))
        });
    }
    c.holds("Def. 2.1 (q = -1)", all.clone(), ns(0, n), move |k, _| {
        q_minus_one_degeneration(tb(), k as usize)
    });

    let specials = [
        ("(2.7)", SpecialValue::TAtMinusOne),
        ("(2.8)", SpecialValue::TAtMinusInvQ),
        ("(2.9)", SpecialValue::TAtMinusQ),
        ("(2.10)", SpecialValue::TAtMinusQ2),
        ("(2.13)", SpecialValue::UAtMinusInvQ),
        ("(2.14)", SpecialValue::UAtMinusOne),
        ("(2.15)", SpecialValue::UAtMinusQ),
        ("(2.16)", SpecialValue::UAtMinusQ2),
    ];
    for (id, sv) in specials {
        c.holds(id, all.clone(), ns(0, n), move |k, _| sv.check(tb(), k));
    }

    c.holds("(2.11)", all.clone(), ns(0, n), move |k, _| {
        inverse_q_check(tb(), Kind::T, k, InverseOrder::Natural)
    });
    c.erratum(
        "(2.17)",
        all.clone(),
        Sweep::new(ns(0, n), move |k, _| inverse_q_check(tb(), Kind::U, k, InverseOrder::Swapped)),
        Sweep::new(ns(0, n), move |k, _| inverse_q_check(tb(), Kind::U, k, InverseOrder::Natural)),
    )
    .note("the left side holds as U_n(x, s, 1/q); the exchanged arguments U_n(s, x, 1/q) do not");

    c.holds("(2.18)", all.clone(), ns(0, n), move |k, _| u_coeff_recurrence(b(), d.gen_u(), k));
    let add = n.min(12);
    c.holds("Rem. 2.1", format!("m + n <= {add}"), pairs(0, add), move |k, m| {
        let fam = d.gen_u();
        addition_formula(fam, m_of(m), k)?;
        expect_eq(format!("U^(1)_{k}"), &gen_u_at_r1(fam, k), tb().u.get(k))
    });
    c.holds("Rem. 2.2", format!("{all}, k <= n/2"), half(0, n), move |k, j| {
        r_product_expansion(b(), k, m_of(j))
    });

    let closed = move |form: ClosedForm, k: i64| {
        expect_eq(
            format!("{form:?} at n = {k}"),
            &cheb_closed(form, b(), k as u32),
            tb().family(form.kind()).get(k),
        )
    };
    c.holds("(2.22)", all.clone(), ns(0, n), move |k, _| closed(ClosedForm::UProduct, k));
    c.erratum(
        "(2.24)",
        all.clone(),
        Sweep::new(ns(0, n), move |k, _| closed(ClosedForm::TTailPrinted, k)),
        Sweep::new(ns(0, n), move |k, _| {
            closed(ClosedForm::TTail, k)?;
            closed(ClosedForm::TQuotient, k)
        }),
    )
    .note("the trailing term for even n is q^((n/2)^2) s^(n/2), not q^(n^2) s^n");

    let mixed = [
        ("(2.23)", Mixed::TFromU),
        ("(2.27)", Mixed::TFromUEta2),
        ("(2.30)", Mixed::TStepFromU),
        ("(2.31)", Mixed::UFromT),
        ("(2.32)", Mixed::TStepEta2),
        ("(2.33)", Mixed::UEta2FromT),
        ("(2.44)", Mixed::TSumFromU),
    ];
    for (id, rel) in mixed {
        let lo = rel.n_min();
        let hi = (lo..=n).rev().find(|&k| rel.reach(k) <= n).unwrap_or(lo);
        c.holds(id, upto(lo, hi), ns(lo, hi), move |k, _| rel.check(tb(), k));
    }
    c.holds("(2.34)", upto(0, n - 1), ns(0, n - 1), move |k, _| check_eta_pair(tb(), k));
    c.holds("(2.35)", upto(0, n - 1), ns(0, n - 1), move |k, _| {
        let p = operator_product(k as usize).step(k);
        expect_eq(format!("even part, n = {k}"), &p.even, tb().t.get(k + 1))?;
        expect_eq(format!("odd part, n = {k}"), &p.odd, tb().u.get(k))
    });
    c.holds("(2.36)", all.clone(), ns(0, n), move |k, _| check_commuting_factors(tb(), k as usize));
    c.holds("(2.37)", all.clone(), ns(0, n), move |k, _| {
        closed(ClosedForm::TBinomialProduct, k)?;
        q_binomial_x2_expansion(b(), k as u32 / 2)?;
        expect_eq(format!("p_{k}(x, A) even part"), &p_n_binomial(b(), k as u32).even, tb().t.get(k))
    });
    c.holds("(2.38)", all.clone(), ns(0, n), move |k, _| {
        closed(ClosedForm::UBinomialProduct, k)?;
        expect_eq(format!("p_{k}(x, A) odd part"), &p_n_binomial(b(), k as u32).odd, tb().u.get(k - 1))
    });
    let quotient: Vec<Param> =
        (1..=n).flat_map(|k| binomial_sum_j_range(k as u32, true).map(move |j| (k, Some(j as i64)))).collect();
    c.holds("(2.39)", format!("{}, j < n", upto(1, n)), quotient, move |k, j| {
        binomial_sum_quotient(b(), k as u32, m_of(j) as u32)
    });
    let product: Vec<Param> =
        (0..=n).flat_map(|k| binomial_sum_j_range(k as u32, false).map(move |j| (k, Some(j as i64)))).collect();
    c.holds("(2.40)", format!("{all}, j <= n"), product, move |k, j| {
        binomial_sum_product(b(), k as u32, m_of(j) as u32)
    });
    c.holds("(2.41)", upto(0, n - 1), ns(0, n - 1), move |k, _| {
        let a = TransferMatrix::at(k);
        let (t, u) = (tb().t.get(k), tb().u.get(k - 1));
        let top = &a.0[0][0] * t + &a.0[0][1] * u;
        let bottom = &a.0[1][0] * t + &a.0[1][1] * u;
        expect_eq(format!("A_{k} (T_{k}, U_{}) first row", k - 1), &top, tb().t.get(k + 1))?;
        expect_eq(format!("A_{k} (T_{k}, U_{}) second row", k - 1), &bottom, tb().u.get(k))?;
        let det = -(XsPoly::q_pow(k) * XsPoly::s());
        expect_eq(format!("det A_{k}"), &a.det(), &det)
    });
    c.holds("(2.42)", all.clone(), ns(0, n), move |k, _| check_transfer_product(tb(), k as usize));
    c.holds("(2.43)", all, ns(0, n), move |k, _| pell_identity(tb(), k as usize));
}

fn tilings<'a>(d: &'a Data, c: &mut Catalogue<'a, '_>) {
    let n = d.max_n(Suite::Tilings) as i64;
    let cap = d.oracle_cap;
    let all = upto(0, n);
    let tb = move || d.tables();
    let b = move || &d.tables().binom;

    c.holds("Thm. 2.1", all.clone(), ns(0, n), move |k, _| {
        expect_eq(format!("w(V_{k})"), &oracle_u_total(k as usize, WeightSpec::W, cap)?, tb().u.get(k))
    });
    c.holds("Rem. 2.1 (w_r)", all.clone(), ns(0, n), move |k, _| {
        expect_eq(format!("w_r(V_{k})"), &oracle_u_total(k as usize, WeightSpec::Wr, cap)?, d.gen_u().get(k))
    });
    c.holds("(2.19)", format!("{all}, k <= n/2"), half(0, n), move |k, j| {
        let j = m_of(j);
        expect_eq(
            format!("u({k},{j})"),
            &oracle_u(k as usize, j as usize, WeightSpec::Wr, cap)?,
            &u_coeff(b(), k, j),
        )
    });
    c.holds("(2.20)", format!("{all}, all k, l"), half(0, n), move |k, j| {
        let (k, j) = (k as usize, m_of(j) as usize);
        (0..=k - 2 * j).try_for_each(|l| check_v(b(), k, j, l, cap))
    });
    c.holds("(2.21)", all.clone(), ns(0, n), move |k, _| check_fischer_board(k as usize, cap));
    c.holds("Def. 2.3", "example word".into(), once(11), |_, _| {
        let t = Tiling::from_word(EXAMPLE_WORD)?;
        let q27 = QRational::q_pow(27);
        expect_eq("w", &weight(&t, WeightSpec::W), &XsPoly::term(q27.clone(), Mono::xs(7, 2)))?;
        expect_eq("w_r", &weight(&t, WeightSpec::Wr), &XsPoly::term(q27, Mono::new(7, 2, 3)))
    });
    let count_n = cap as i64;
    c.holds("Def. 2.3 (count)", upto(0, count_n), ns(0, count_n), move |k, _| {
        let counted = enumerate(k as usize, cap)?.count() as u64;
        let want = if k < 2 {
            tiling_count(k as usize)
        } else {
            2 * tiling_count(k as usize - 1) + tiling_count(k as usize - 2)
        };
        if counted == want && want == tiling_count(k as usize) {
            Ok(())
        } else {
            let diff = counted as i64 - want as i64;
            Err(Error::mismatch(format!("number of tilings of a {k}-board"), XsPoly::from_int(diff)))
        }
    });
    c.holds("Thm. 2.4", all.clone(), ns(0, n), move |k, _| {
        expect_eq(format!("T_{k} tilings"), &oracle_t_total(k as usize, WeightSpec::W, cap)?, tb().t.get(k))
    });
    c.holds("(2.25)", format!("{}, k <= n/2", upto(1, n)), half(1, n), move |k, j| {
        let j = m_of(j);
        let r1 = |p: XsPoly| p.subst_const(Var::R, &QRational::one());
        let rhs = r1(u_coeff(b(), k - 1, j)) * XsPoly::x()
            + r1(u_coeff(b(), k - 2, j - 1)) * (XsPoly::q_pow(k - 1) * XsPoly::s());
        expect_eq(format!("t({k},{j})"), &oracle_t(k as usize, j as usize, cap)?, &rhs)
    });
    c.holds("(2.26)", format!("{}, k <= n/2", upto(1, n)), half(1, n), move |k, j| {
        let j = m_of(j);
        let closed = XsPoly::term(t_quotient_coeff(b(), k as u32, j as u32), Mono::xs((k - 2 * j) as u32, j as u32));
        expect_eq(format!("t({k},{j})"), &oracle_t(k as usize, j as usize, cap)?, &closed)
    });
    c.holds("Thm. 2.5 (w(T_2))", "n = 2".into(), once(2), move |_, _| {
        let w = t2_counterexample(cap)?;
        let printed = XsPoly::x() * XsPoly::x() * (XsPoly::one() + XsPoly::q_pow(2)) + XsPoly::q_pow(1) * XsPoly::s();
        expect_eq("w({aa, ab, dd})", &w, &printed)?;
        if &w == tb().t.get(2) {
            return Err(Error::mismatch("w({aa, ab, dd}) unexpectedly equals T_2", XsPoly::zero()));
        }
        Ok(())
    })
    .note("reproduces w(T_2) = x^2 + q^2 x^2 + qs, which differs from T_2");
    c.holds("Thm. 2.6", all, ns(0, n), move |k, _| {
        expect_eq(
            format!("T_{k} with domino weights q^(i+1) s"),
            &oracle_t_total(k as usize, WeightSpec::WCircle, cap)?,
            tb().t.get(k),
        )
    });
}

fn moments<'a>(d: &'a Data, c: &mut Catalogue<'a, '_>) {
    let n = d.max_n(Suite::Moments) as i64;
    let all = upto(0, n);
    let tb = move || d.tables();
    let kinds = [Kind::T, Kind::U];
    let fun = |kind: Kind| if kind == Kind::T { Functional::L } else { Functional::M };

    let triangles: &'a OnceLock<Vec<MomentTriangle>> = Box::leak(Box::new(OnceLock::new()));
    let tri = move |kind: Kind| {
        let all = triangles.get_or_init(|| kinds.iter().map(|&k| favard_triangle(k, n as usize, true)).collect());
        &all[usize::from(kind == Kind::U)]
    };

    c.holds("(1.9)", all.clone(), ns(0, n), move |k, _| {
        kinds.iter().try_for_each(|&kind| check_favard(tb(), tri(kind), kind, k as usize))
    });
    c.holds("(1.10)", all.clone(), once(n), move |k, _| {
        kinds.iter().try_for_each(|&kind| monic_params(tb(), kind, k as usize).map(drop))
    });
    c.holds("(1.11)", all.clone(), ns(0, n), move |k, _| {
        kinds.iter().try_for_each(|&kind| {
            let f = fun(kind);
            expect_eq(format!("a({k},0) against {f}(x^{k})"), &tri(kind).a[k as usize][0], &moment(f, k as usize))
        })
    })
    .note("t(n) enters with the sign of P_n = (x - s(n-1)) P_{n-1} - t(n-2) P_{n-2}");
    let h = n.min(6);
    c.holds("(1.12)", upto(0, h), ns(0, h), move |k, _| {
        [Functional::L, Functional::M].iter().try_for_each(|&f| check_hankel(tb(), f, k as usize))
    });
    c.holds("(2.45)", all.clone(), ns(0, n), move |k, _| {
        check_defining(tb(), Functional::L, k as usize)?;
        check_defining(tb(), Functional::M, k as usize)
    });
    c.holds("(2.46)", all.clone(), ns(0, n), move |k, _| check_bridge_on_u(tb(), k as usize));
    let o = n.min(8);
    for (id, f) in [("(2.47)", Functional::L), ("(2.50)", Functional::M)] {
        c.holds(id, format!("m, n <= {o}"), grid(o), move |k, m| {
            check_orthogonality(tb(), f, m_of(m) as usize, k as usize)
        });
    }
    for (id, kind) in [("(2.48)", Kind::T), ("(2.51)", Kind::U)] {
        c.holds(id, all.clone(), ns(0, n), move |k, _| expand_monomial(tb(), kind, k as usize).map(drop));
    }
    for (id, f) in [("(2.49)", Functional::L), ("(2.52)", Functional::M)] {
        c.holds(id, upto(0, 2 * n), ns(0, 2 * n), move |k, _| {
            let k = k as usize;
            expect_eq(format!("{f}(x^{k})"), &moment(f, k), &moment_pochhammer(f, k))?;
            if f == Functional::L && k as i64 <= n {
                check_xn_tn(tb(), k)?;
            }
            Ok(())
        });
    }
    c.erratum(
        "Rem. 2.4",
        upto(0, 2 * n),
        Sweep::new(ns(0, 2 * n), |k, _| {
            let k = k as usize;
            expect_eq(format!("printed M(x^{k})"), &moment_m_printed(k), &moment(Functional::M, k))
        }),
        Sweep::new(ns(0, 2 * n), |k, _| {
            let k = k as usize;
            [Functional::L, Functional::M]
                .iter()
                .try_for_each(|&f| expect_eq(format!("{f}(x^{k})"), &moment_pochhammer(f, k), &moment(f, k)))
        }),
    )
    .note("M(x^(2n)) = (q;q^2)_n / (q^4;q^2)_n (-qs)^n; the printed numerator (q^2;q^2)_n fails");
}

fn tangent<'a>(d: &'a Data, c: &mut Catalogue<'a, '_>) {
    let g_n = d.genocchi_n() as i64;
    let order = 2 * g_n as usize + 2;
    let all = upto(0, g_n);
    let series_bound = format!("order {order}");
    let shift = SHIFT_BOUND as i64;
    let shift_bound = format!("n + m <= {shift}");
    let tb = move || d.tables();
    let b = move || &d.tables().binom;
    let one = move || d.one();
    let t = move || d.tangent();
    let g = move || d.genocchi();
    let eq_q = |what: String, a: &QRational, b: &QRational| expect_eq(what, &konst(a.clone()), &konst(b.clone()));

    c.holds("(3.1)", all.clone(), ns(0, g_n), move |k, _| {
        let p = one().t(2 * k + 1);
        BasisFunctional::mu(one(), k as usize, false)?.expand(p).map(drop)
    });
    c.holds("(3.2)", all.clone(), ns(0, g_n), move |k, _| {
        let p = one().u(2 * k + 1);
        BasisFunctional::lambda(one(), k as usize)?.expand(p).map(drop)
    });
    c.holds("(3.3)", series_bound.clone(), once(g_n), move |_, _| t().map(drop));
    c.holds("(3.4)", all.clone(), ns(0, g_n), move |k, _| expand_t_odd(tb(), t()?, k as usize));
    for kind in [SeriesKind::TGen, SeriesKind::UGen] {
        let (def, prod, quot, s0) = match kind {
            SeriesKind::TGen => ("(3.5)", "(3.6)", "(3.7)", "(3.8)"),
            SeriesKind::UGen => ("(3.21)", "(3.20)", "(3.22)", "(3.23)"),
        };
        c.holds(def, series_bound.clone(), once(order as i64), move |_, _| {
            check_reflection(kind, &raw_series(kind, one(), order))
        });
        c.holds(prod, series_bound.clone(), once(order as i64), move |_, _| {
            series_eq(&format!("{kind}(z) product form"), &raw_series(kind, one(), order), &product_form(kind, order)?)
        });
        c.holds(quot, series_bound.clone(), once(order as i64), move |_, _| check_quotient(kind, order));
        c.holds(s0, series_bound.clone(), once(order as i64), move |_, _| {
            series_eq(&format!("{kind} quotient at s = 0"), &parity_quotient_s0(kind, order)?, &tanh_q(order)?)
        });
    }
    c.holds("(3.9)", all.clone(), ns(0, g_n), move |k, _| {
        let k = k as usize;
        let coords = BasisFunctional::mu(one(), k, false)?.expand(one().t(2 * k as i64 + 1))?;
        coords
            .iter()
            .enumerate()
            .try_for_each(|(j, x)| eq_q(format!("a({k}, {j})"), x, &t_odd_coeff(b(), t()?, k, j)))
    });
    c.holds("(3.12)", shift_bound.clone(), pairs(0, shift), move |k, m| {
        let (k, m) = (k as usize, m_of(m) as usize);
        shift_identity(SeriesKind::TGen, one(), b(), k, m)?;
        if m <= 1 {
            t_shift_corollary(one(), b(), k, m)?;
        }
        Ok(())
    });
    c.holds("(3.13)", all.clone(), ns(0, g_n), move |k, _| check_t_odd_shift(one(), b(), k as usize));
    let brackets: Vec<Param> = (0..=g_n).flat_map(|k| (1..=k + 1).map(move |j| (k, Some(j)))).collect();
    c.erratum(
        "(3.13) bracket",
        format!("{all}, 1 <= j <= n+1"),
        Sweep::new(brackets.clone(), move |k, j| bracket_replacement(b(), k as usize, m_of(j) as usize, true)),
        Sweep::new(brackets, move |k, j| bracket_replacement(b(), k as usize, m_of(j) as usize, false)),
    )
    .note("[n+1,j] + q^(n+1) [n,j] = [n+1,j] [2n+2-j] / [n+1]; the printed 2j in place of j fails");
    c.erratum(
        "(3.13) mu",
        all.clone(),
        Sweep::new(ns(0, g_n), move |k, _| check_mu(one(), b(), t()?, k as usize, true)),
        Sweep::new(ns(0, g_n), move |k, _| check_mu(one(), b(), t()?, k as usize, false)),
    )
    .note("mu(T_2n(1,s)) = [n = 0] gives mu(T_2n+1(1,s)) = (-1)^n t_2n+1; the printed [n+1] does not");
    c.holds("(3.14)", upto(1, g_n), ns(1, g_n), move |k, _| tangent_recurrence(b(), t()?, k as usize));
    c.holds("(3.17)", series_bound, once(g_n + 1), move |_, _| check_genocchi_series(g()?));
    c.holds("(3.18)", all.clone(), ns(0, g_n), move |k, _| {
        let k_ = k as usize;
        let edge = d.triangle().get(2 * k_ + 1, k_ + 1);
        let via_triangle = edge.checked_div(&QRational::from_poly(q_int(2 * k as u32 + 2)))?;
        let via_g = g()?.get(k_ + 1) * neg_q_poch(2 * k as u32 + 1) / QRational::from_poly(q_int(2 * k as u32 + 2));
        eq_q(format!("t_{} from the triangle", 2 * k + 1), t()?.get(k_), &via_triangle)?;
        eq_q(format!("t_{} from G_{}", 2 * k + 1, 2 * k + 2), t()?.get(k_), &via_g)
    });
    c.holds("(3.19)", all.clone(), ns(0, g_n), move |k, _| expand_u_odd(tb(), g()?, k as usize));
    c.erratum(
        "(3.23) display",
        upto(1, g_n + 1),
        Sweep::new(ns(1, g_n + 1), move |k, _| u_odd_display(one(), b(), g()?, k as usize, true)),
        Sweep::new(ns(1, g_n + 1), move |k, _| u_odd_display(one(), b(), g()?, k as usize, false)),
    )
    .note("the factor 1/[2k+1] appears once, not twice");
    c.holds("(3.24)", upto(1, g_n + 1), ns(1, g_n + 1), move |k, _| {
        check_palindrome(g()?, k as usize)?;
        integral_genocchi(g()?, k as usize).map(drop)
    })
    .note("also checks that (-q^(n+1);q)_(n-1) G_2n has integer coefficients");
    c.holds("(3.25)", shift_bound.clone(), pairs(0, shift), move |k, m| {
        shift_identity(SeriesKind::UGen, one(), b(), k as usize, m_of(m) as usize)
    });
    let base: Vec<Param> = (0..=1).flat_map(|k| (0..=shift - 1).map(move |m| (k, Some(m)))).collect();
    c.holds("(3.26)", format!("n <= 1, m <= {}", shift - 1), base, move |k, m| {
        shift_identity(SeriesKind::UGen, one(), b(), k as usize, m_of(m) as usize)
    });
    c.holds("(3.27)", shift_bound.clone(), pairs(0, shift), move |k, m| {
        let (k, m) = (k as usize, m_of(m) as usize);
        let w = w_by_recursion(one(), k, m);
        let (_, rhs) = shift_sides(SeriesKind::UGen, one(), b(), k, m);
        expect_eq(format!("W({k}, {m}) by the recursion"), &w, &rhs)
    })
    .note("W is built from W(0, m) = U_(m-1)(1,s) by the recursion and compared with the closed value");
    c.holds("(3.28)", shift_bound, pairs(1, shift), move |k, m| {
        check_w_recursion(one(), b(), k as usize, m_of(m) as usize)
    });
    c.holds("(3.29)", upto(1, shift), ns(1, shift), move |k, _| {
        shift_identity(SeriesKind::UGen, one(), b(), k as usize, 0)
    });
    c.holds("(3.30)", upto(1, g_n + 1), ns(1, g_n + 1), move |k, _| q_seidel(b(), g()?, k as usize));
    c.holds("(3.31)", all.clone(), ns(0, g_n), move |k, _| {
        let lambda = BasisFunctional::lambda(one(), g_n as usize)?;
        let want = if k == 0 { QRational::one() } else { QRational::zero() };
        eq_q(format!("lambda(U_{}(1,s))", 2 * k), &lambda.apply(one().u(2 * k))?, &want)
    });
    c.holds("(3.32)", upto(1, g_n), ns(1, g_n), move |k, _| check_lambda(one(), b(), g()?, k as usize));
    let rows = 2 * g_n + 1;
    for (id, part) in [
        ("(3.33)", TrianglePart::OddRows),
        ("(3.34)", TrianglePart::EvenRows),
        ("(3.35)", TrianglePart::Edge),
    ] {
        c.holds(id, format!("rows <= {rows}"), once(rows), move |_, _| {
            check_triangle_part(d.triangle(), g()?, part)
        });
    }
}

/// `W(n, m)` from `W(0, m) = U_{m-1}(1,s)` and
/// `W(n, m) = W(n-1, m+2) - q^(n-1) (1+q^(m+1)) W(n-1, m+1)`.
fn w_by_recursion(one: &crate::tangent::XOne, n: usize, m: usize) -> XsPoly {
    let mut row: Vec<XsPoly> = (0..=m + 2 * n).map(|j| one.u(j as i64 - 1).clone()).collect();
    for level in 1..=n {
        let f = |j: usize| XsPoly::q_pow(level as i64 - 1) * (XsPoly::one() + XsPoly::q_pow(j as i64 + 1));
        row = (0..row.len() - 2).map(|j| &row[j + 2] - &(f(j) * &row[j + 1])).collect();
    }
    row[m].clone()
}

fn q1_classical<'a>(d: &'a Data, c: &mut Catalogue<'a, '_>) {
    let n = d.max_n(Suite::Q1Classical) as i64;
    let g_n = d.genocchi_n() as i64;
    let e = n.min(5).min(g_n);
    let all = upto(0, n);
    let shift = SHIFT_BOUND as i64;
    let tb = move || d.tables();
    let b = move || &d.tables().binom;
    let t1 = move || d.tangent().map(classical_tangents);
    let g1 = move || d.genocchi().map(classical_genocchi);

    for kind in [Kind::T, Kind::U] {
        let (rec, at1, brec, det) = match kind {
            Kind::T => ("(1.1)", "(1.2)", "(1.19)", "(1.20)"),
            Kind::U => ("(1.3)", "(1.4)", "(1.21)", "(1.22)"),
        };
        c.holds(rec, upto(2, n), ns(2, n), move |k, _| classical::chebyshev_recurrence(tb(), kind, k));
        c.holds(at1, all.clone(), ns(0, n), move |k, _| classical::value_at_one(tb(), kind, k));
        c.holds(brec, all.clone(), ns(0, n), move |k, _| check_classical_recurrence(tb(), kind, k));
        c.holds(det, all.clone(), ns(0, n), move |k, _| {
            expect_eq(format!("{kind}_{k}(x, s) determinant"), &classical_det(kind, k as usize), &at_q1(tb().family(kind).get(k)))
        });
    }
    for (norm, mom, f) in [("(1.14)", "(1.15)", Functional::L), ("(1.17)", "(1.18)", Functional::M)] {
        let kind = f.family();
        c.holds(norm, all.clone(), ns(0, n), move |k, _| {
            let p = tb().family(kind).get(k);
            let v = crate::tangent::classical(&apply_functional(f, &(p * p)));
            let want = match (f, k) {
                (Functional::L, 0) | (Functional::M, _) => int(1),
                (Functional::L, _) => Rational::new(1.into(), 2.into()),
            };
            expect_eq(format!("{f}({kind}_{k}^2)"), &v, &rat_poly(&want))
        });
        c.holds(mom, upto(0, 2 * n), ns(0, 2 * n), move |k, _| {
            let got = classical_moment(f, k as usize)?;
            expect_eq(format!("{f}(x^{k})"), &rat_poly(&got), &rat_poly(&expected_classical_moment(f, k as usize)))
        });
    }
    c.holds("(1.23)", all.clone(), ns(0, n), move |k, _| sqrt_pair_classical(tb(), k as usize));
    c.holds("(1.24)", all.clone(), ns(0, n), move |k, _| pell_classical(tb(), k as usize));
    c.holds("(1.25)", all.clone(), ns(0, n), move |k, _| classical::fibonacci_sum(b(), k as u32));
    c.holds("(1.26)", upto(1, n), ns(1, n), move |k, _| classical::lucas_sum(b(), k as u32));
    c.holds("(1.27)", all.clone(), ns(0, n), move |k, _| classical::monic_t_lucas(tb(), k as u32));
    c.holds("(1.28)", all.clone(), ns(0, n), move |k, _| classical::lucas_inversion(b(), k as u32));
    c.holds("(1.29)", all.clone(), ns(0, n), move |k, _| classical::monic_u_fibonacci(tb(), k as u32));
    c.holds("(1.30)", all.clone(), ns(0, n), move |k, _| classical::fibonacci_inversion(b(), k as u32));
    c.holds("(1.31)", upto(0, e), ns(0, e), move |k, _| classical_t_odd(tb(), &t1()?, k as usize));
    c.erratum(
        "(1.32)",
        upto(0, e),
        Sweep::new(ns(0, e), move |k, _| classical_u_odd(tb(), &g1()?, k as usize, true)),
        Sweep::new(ns(0, e), move |k, _| classical_u_odd(tb(), &g1()?, k as usize, false)),
    )
    .note("the power of 2x is 2n-2k+1, not 2n-2k");
    c.holds("(1.33), (1.34)", format!("order {}", 2 * g_n + 2), once(g_n), move |_, _| {
        classical_series(&t1()?, &g1()?)
    });
    c.holds("(1.35)", upto(0, g_n), ns(0, g_n), move |k, _| {
        classical_tangent_genocchi(&t1()?, &g1()?, k as usize)
    });
    c.holds("(2.28)", upto(0, n - 1), ns(0, n - 1), move |k, _| {
        let (t, u) = (&tb().t, &tb().u);
        let x = XsPoly::x();
        let rhs = &x * &at_q1(t.get(k)) + (&x * &x + XsPoly::s()) * at_q1(u.get(k - 1));
        expect_eq(format!("T_{}(x, s)", k + 1), &at_q1(t.get(k + 1)), &rhs)
    });
    c.holds("(2.29)", all.clone(), ns(0, n), move |k, _| {
        let (t, u) = (&tb().t, &tb().u);
        let rhs = at_q1(t.get(k)) + XsPoly::x() * at_q1(u.get(k - 1));
        expect_eq(format!("U_{k}(x, s)"), &at_q1(u.get(k)), &rhs)
    });
    c.holds("(3.3) at q = 1", "n <= 4".into(), once(4), move |_, _| {
        let t = t1()?;
        let want = [1, 2, 16, 272, 7936];
        want.iter().enumerate().try_for_each(|(i, &w)| {
            let got = t.get(i).cloned().unwrap_or_else(|| int(0));
            expect_eq(format!("t_{} at q = 1", 2 * i + 1), &rat_poly(&got), &rat_poly(&int(w)))
        })
    });
    c.holds("(3.10)", format!("n + m <= {shift}"), pairs(0, shift), move |k, m| {
        classical_shift(tb(), SeriesKind::TGen, k as usize, m_of(m) as usize, false)
    });
    c.erratum(
        "(3.11)",
        format!("n + m <= {shift}"),
        Sweep::new(pairs(0, shift), move |k, m| {
            classical_shift(tb(), SeriesKind::UGen, k as usize, m_of(m) as usize, true)
        }),
        Sweep::new(pairs(0, shift), move |k, m| {
            classical_shift(tb(), SeriesKind::UGen, k as usize, m_of(m) as usize, false)
        }),
    )
    .note("the right side is s^n U_(m-1)(x, s)");
    c.erratum(
        "(3.15)",
        upto(1, g_n),
        Sweep::new(ns(1, g_n), move |k, _| classical_tangent_recurrence(&t1()?, k as usize, true)),
        Sweep::new(ns(1, g_n), move |k, _| classical_tangent_recurrence(&t1()?, k as usize, false)),
    )
    .note("each summand needs the factor t_(2n+1-2j); with it t_3 = 2 t_1, t_9 = 32 t_7 - 48 t_5");
    c.holds("(3.16)", upto(2, g_n + 1), ns(2, g_n + 1), move |k, _| classical_seidel(&g1()?, k as usize));
    c.holds("(3.17) at q = 1", "n <= 6".into(), once(6), move |_, _| {
        let g = g1()?;
        let want = [1, 1, 3, 17, 155, 2073];
        want.iter().enumerate().try_for_each(|(i, &w)| {
            let got = g.get(i).cloned().unwrap_or_else(|| int(0));
            expect_eq(format!("G_{} at q = 1", 2 * i + 2), &rat_poly(&got), &rat_poly(&int(w)))
        })
    });
}
