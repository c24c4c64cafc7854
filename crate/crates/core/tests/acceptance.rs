//! Acceptance criteria 1-11. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion does.

use std::time::{Duration, Instant};

use qcheb::chebyshev::{
    at_q1, check_classical_recurrence, check_transfer_product, cheb_closed, cheb_det, pell_classical, pell_identity,
    ChebTables, ClosedForm, Kind, SpecialValue,
};
use qcheb::error::expect_eq;
use qcheb::moments::{
    check_hankel, check_orthogonality, expand_monomial, favard_triangle, moment, moment_pochhammer, norm,
    apply_functional, Functional,
};
use qcheb::qcomb::{verify_fib_inversion, verify_luc_inversion};
use qcheb::tangent::{
    check_palindrome, check_triangle_part, classical_tangent_recurrence, classical_tangents, classical_u_odd,
    classical_t_odd, classical_genocchi, expand_t_odd, expand_u_odd, genocchi_from_tangent, integral_genocchi,
    q_seidel, q_tangent, shift_identity, tangent_recurrence, SeidelTriangle, SeriesKind, TrianglePart, XOne,
};
use qcheb::tiling::{check_fischer_board, enumerate, oracle_t_total, oracle_u_total, t2_counterexample, WeightSpec};
use qcheb::verify::{self, Output, VerifyConfig};
use qcheb::{QPoly, QRational, Rational, XsPoly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ok<E: std::fmt::Display>(r: Result<(), E>) -> Outcome {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.1?}, limit {limit:?}"))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Recurrence = closed forms = determinant for n <= 30, = oracle for n <= 12.
fn four_way() -> Outcome {
    let start = Instant::now();
    let tables = ChebTables::new(30);
    let b = &tables.binom;
    for n in 0..=30u32 {
        let t = tables.t.get(n as i64);
        let u = tables.u.get(n as i64);
        for form in [ClosedForm::TQuotient, ClosedForm::TTail, ClosedForm::TBinomialProduct] {
            ok(expect_eq(format!("{form:?}, n = {n}"), &cheb_closed(form, b, n), t))?;
        }
        for form in [ClosedForm::UProduct, ClosedForm::UBinomialProduct] {
            ok(expect_eq(format!("{form:?}, n = {n}"), &cheb_closed(form, b, n), u))?;
        }
        ok(expect_eq(format!("det T_{n}"), &cheb_det(Kind::T, n as usize), t))?;
        ok(expect_eq(format!("det U_{n}"), &cheb_det(Kind::U, n as usize), u))?;
        if n <= 12 {
            ok(expect_eq(format!("oracle T_{n}"), &oracle_t_total(n as usize, WeightSpec::W, 16).map_err(|e| e.to_string())?, t))?;
            ok(expect_eq(format!("oracle U_{n}"), &oracle_u_total(n as usize, WeightSpec::W, 16).map_err(|e| e.to_string())?, u))?;
        }
    }
    within(start, Duration::from_secs(20))
}

fn golden_terms() -> Outcome {
    let tables = ChebTables::new(3);
    let render = |f: &qcheb::chebyshev::ChebFamily| -> Vec<String> { f.values()[..4].iter().map(|p| p.to_string()).collect() };
    let t = ["1", "x", "(1+q)*x^2 + q*s", "(1+q+q^2+q^3)*x^3 + (q+q^2+q^3)*s*x"];
    let u = [
        "1",
        "(1+q)*x",
        "(1+q+q^2+q^3)*x^2 + q*s",
        "(1+q+q^2+2*q^3+q^4+q^5+q^6)*x^3 + (q+q^2+q^3+q^4)*s*x",
    ];
    ensure(render(&tables.t) == t, format!("T: {:?}", render(&tables.t)))?;
    ensure(render(&tables.u) == u, format!("U: {:?}", render(&tables.u)))
}

fn special_values() -> Outcome {
    let tables = ChebTables::new(22);
    for sv in [
        SpecialValue::TAtMinusOne,
        SpecialValue::TAtMinusInvQ,
        SpecialValue::TAtMinusQ,
        SpecialValue::TAtMinusQ2,
        SpecialValue::UAtMinusInvQ,
        SpecialValue::UAtMinusOne,
        SpecialValue::UAtMinusQ,
        SpecialValue::UAtMinusQ2,
    ] {
        for n in 0..=20 {
            ok(sv.check(&tables, n))?;
        }
    }
    Ok(())
}

/// The Pell check also compares `eta` of the transfer-product determinant
/// with the right side.
fn pell_and_transfer() -> Outcome {
    let tables = ChebTables::new(13);
    for n in 0..=12 {
        ok(pell_identity(&tables, n))?;
        ok(check_transfer_product(&tables, n))?;
    }
    Ok(())
}

fn orthogonality() -> Outcome {
    let tables = ChebTables::new(16);
    for f in [Functional::L, Functional::M] {
        for m in 0..=8 {
            for n in 0..=8 {
                ok(check_orthogonality(&tables, f, m, n))?;
            }
            let p = tables.family(f.family()).get(m as i64);
            ok(expect_eq(format!("norm {f} {m}"), &apply_functional(f, &(p * p)), &norm(f, m)))?;
        }
        let kind = f.family();
        let tri = favard_triangle(kind, 14, true);
        for n in 0..=14 {
            let closed = moment(f, n);
            ok(expect_eq(format!("{f}: a({n},0)"), &tri.a[n][0], &closed))?;
            ok(expect_eq(format!("{f}: Pochhammer form, n = {n}"), &moment_pochhammer(f, n), &closed))?;
            let coeffs = expand_monomial(&tables, kind, n).map_err(|e| e.to_string())?;
            let c0 = coeffs.iter().find(|(i, _)| *i == 0).map(|(_, c)| c.clone()).unwrap_or_else(XsPoly::zero);
            ok(expect_eq(format!("{f}: P_0 coefficient of x^{n}"), &c0, &closed))?;
        }
        for n in 0..=6 {
            ok(check_hankel(&tables, f, n))?;
        }
    }
    Ok(())
}

fn expansions_and_inversions() -> Outcome {
    let tables = ChebTables::new(16);
    for n in 0..=14 {
        for kind in [Kind::T, Kind::U] {
            expand_monomial(&tables, kind, n).map_err(|e| e.to_string())?;
        }
    }
    for n in 0..=12 {
        ok(verify_luc_inversion(&tables.binom, n))?;
        ok(verify_fib_inversion(&tables.binom, n))?;
    }
    Ok(())
}

fn tangent_genocchi() -> Outcome {
    let t = q_tangent(6).map_err(|e| e.to_string())?;
    let t1 = classical_tangents(&t);
    let want: Vec<Rational> = [1, 2, 16, 272, 7936].into_iter().map(int).collect();
    ensure(t1[..5] == want[..], format!("tangent numbers at q = 1: {:?}", &t1[..5]))?;

    let g = genocchi_from_tangent(&t);
    let q = |k: u32| QPoly::q_pow(k);
    let one_plus = |k: u32| &QPoly::one() + &QPoly::q_pow(k);
    let g4 = QRational::new(&q(1) * &one_plus(1), one_plus(3)).unwrap();
    let g6_num = &(&(&q(2) * &one_plus(1)) * &one_plus(2)) * &QPoly::from_coeffs(&[1, 1, 1]);
    let g6 = QRational::new(g6_num, &one_plus(4) * &one_plus(5)).unwrap();
    ensure(g.get(1) == QRational::one(), "G_2")?;
    ensure(g.get(2) == g4, format!("G_4 = {}", g.get(2)))?;
    ensure(g.get(3) == g6, format!("G_6 = {}", g.get(3)))?;
    ensure(g.render(2) == "q*(1+q)/(1+q^3)", format!("G_4 renders as {}", g.render(2)))?;

    let tri = SeidelTriangle::build(13);
    ok(check_triangle_part(&tri, &g, TrianglePart::Edge))?;
    for n in 1..=6 {
        ok(check_palindrome(&g, n))?;
        integral_genocchi(&g, n).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn expansion_theorems() -> Outcome {
    let tables = ChebTables::new(24);
    let one = XOne::new(&tables);
    let b = &tables.binom;
    let t = q_tangent(6).map_err(|e| e.to_string())?;
    let g = genocchi_from_tangent(&t);
    for n in 0..=5 {
        ok(expand_t_odd(&tables, &t, n))?;
        ok(expand_u_odd(&tables, &g, n))?;
    }
    for n in 0..=10 {
        for m in 0..=10 - n {
            ok(shift_identity(SeriesKind::TGen, &one, b, n, m))?;
            ok(shift_identity(SeriesKind::UGen, &one, b, n, m))?;
        }
    }
    for n in 1..=6 {
        ok(q_seidel(b, &g, n))?;
        ok(tangent_recurrence(b, &t, n))?;
    }
    let t1 = classical_tangents(&t);
    ensure(t1[1] == int(2) * &t1[0], "t_3 = 2 t_1")?;
    ensure(t1[4] == int(32) * &t1[3] - int(48) * &t1[2], "t_9 = 32 t_7 - 48 t_5")?;
    for n in 1..=6 {
        ok(classical_tangent_recurrence(&t1, n, false))?;
    }
    Ok(())
}

fn tilings() -> Outcome {
    let mut c = vec![1u64, 2];
    for n in 0..=16usize {
        if n >= 2 {
            c.push(2 * c[n - 1] + c[n - 2]);
        }
        let counted = enumerate(n, 16).map_err(|e| e.to_string())?.count() as u64;
        ensure(counted == c[n], format!("{counted} tilings of a {n}-board, expected {}", c[n]))?;
    }
    for n in 0..=10 {
        ok(check_fischer_board(n, 16))?;
    }
    let w = t2_counterexample(16).map_err(|e| e.to_string())?;
    ensure(w.to_string() == "(1+q^2)*x^2 + q*s", format!("w(T_2) = {w}"))?;
    ensure(&w != ChebTables::new(2).t.get(2), "w(T_2) should differ from T_2")
}

fn q1_regression() -> Outcome {
    let tables = ChebTables::new(20);
    let t = q_tangent(6).map_err(|e| e.to_string())?;
    let g = classical_genocchi(&genocchi_from_tangent(&t));
    let t = classical_tangents(&t);
    for n in 0..=5 {
        ok(check_classical_recurrence(&tables, Kind::T, n))?;
        ok(check_classical_recurrence(&tables, Kind::U, n))?;
        ok(pell_classical(&tables, n as usize))?;
        ok(classical_t_odd(&tables, &t, n as usize))?;
        ok(classical_u_odd(&tables, &g, n as usize, false))?;
    }
    ensure(at_q1(tables.t.get(2)).to_string() == "2*x^2 + s", "T_2 at q = 1")
}

fn full_verify() -> Outcome {
    let start = Instant::now();
    let config = VerifyConfig::default();
    let first = verify::run(&config).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(60))?;
    ensure(first.exit_code() == 0, "default verify run did not pass")?;
    ensure(first.identities.len() >= 40, format!("only {} records", first.identities.len()))?;
    let second = verify::run(&config).map_err(|e| e.to_string())?;
    ensure(first.render(Output::Text) == second.render(Output::Text), "text report differs between runs")?;
    ensure(first.render(Output::Json) == second.render(Output::Json), "JSON report differs between runs")
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("four-way T/U agreement", four_way),
        ("first terms of T and U", golden_terms),
        ("special values for n <= 20", special_values),
        ("Pell and transfer-matrix identities", pell_and_transfer),
        ("orthogonality, norms, moments and Hankel", orthogonality),
        ("monomial expansions and inversions", expansions_and_inversions),
        ("q-tangent and q-Genocchi values", tangent_genocchi),
        ("expansion, shift and Seidel identities", expansion_theorems),
        ("tiling count, Fischer map, w(T_2)", tilings),
        ("q = 1 regression", q1_regression),
        ("full verify: time and determinism", full_verify),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match &outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({t:.1?})", i + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL  {name} ({t:.1?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
