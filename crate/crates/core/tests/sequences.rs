use qcheb::chebyshev::ChebTables;
use qcheb::moments::{moment, moments_json, Functional};
use qcheb::tangent::{genocchi_from_tangent, integral_genocchi, q_tangent, SeidelTriangle};
use qcheb::tiling::{weight, Tiling, WeightSpec, EXAMPLE_WORD};

#[test]
fn genocchi_prints_in_factored_form() {
    let g = genocchi_from_tangent(&q_tangent(3).unwrap());
    assert_eq!(g.render(1), "1");
    assert_eq!(g.render(2), "q*(1+q)/(1+q^3)");
    assert_eq!(g.render(3), "q^2*(1+q)*(1+q^2)*(1+q+q^2)/((1+q^4)*(1+q^5))");
    assert_eq!(
        g.render(4),
        "q^3*(1+q)^2*(1+q^2)*(1+q+3*q^2+2*q^3+3*q^4+2*q^5+3*q^6+q^7+q^8)/((1+q^5)*(1+q^6)*(1+q^7))"
    );
    assert_eq!(integral_genocchi(&g, 2).unwrap().to_string(), "q+q^2");
}

#[test]
fn tangent_numbers_start_with_one() {
    let t = q_tangent(2).unwrap();
    assert_eq!(t.get(0).to_string(), "1");
    assert_eq!(t.get(1).to_string(), "q+q^2");
}

#[test]
fn seidel_triangle_exports_rows() {
    let rows: Vec<Vec<String>> = serde_json::from_str(&SeidelTriangle::build(3).to_json()).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0], ["0", "1"]);
}

#[test]
fn moments_in_canonical_form() {
    assert_eq!(moment(Functional::L, 2).to_string(), "-q*s/(1+q)");
    assert!(moment(Functional::M, 3).is_zero());
    let all: Vec<String> = serde_json::from_str(&moments_json(Functional::L, 4)).unwrap();
    assert_eq!(all[0], "1");
    assert_eq!(all[2], "-q*s/(1+q)");
}

#[test]
fn example_word_weights() {
    let t = Tiling::from_word(EXAMPLE_WORD).unwrap();
    assert_eq!(weight(&t, WeightSpec::W).to_string(), "q^27*s^2*x^7");
    assert_eq!(weight(&t, WeightSpec::Wr).to_string(), "q^27*r^3*s^2*x^7");
    assert!(Tiling::from_word("abddadddaab").is_err());
}

#[test]
fn tables_render_canonically() {
    let tables = ChebTables::new(2);
    assert_eq!(tables.u.get(2).to_string(), "(1+q+q^2+q^3)*x^2 + q*s");
}
