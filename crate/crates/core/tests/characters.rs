use mlde_core::forms::{delta3, eta, i3};
use mlde_core::hypergeom::character_series;
use mlde_core::series::{as_integer, int, rat, QSeries};

fn ints(f: &QSeries, upto: usize) -> Vec<i64> {
    f.coeffs()[..upto]
        .iter()
        .map(|c| as_integer(c).expect("integral"))
        .collect()
}

/// Theta series of the E6 root lattice, OEIS A004007.
const E6_THETA: [i64; 9] = [1, 72, 270, 720, 936, 2160, 2214, 3600, 4590];

#[test]
fn e6_character_is_lattice_theta_over_eta6() {
    let theta = QSeries::from_integers(int(0), &E6_THETA);
    let eta6 = eta(9).pow_int(6).unwrap();
    let expected = theta.div(&eta6).unwrap();
    let f = character_series(&rat(-1, 4), 9).unwrap();
    assert_eq!(f, expected);
    assert_eq!(f.coeff(6), &int(264644));
}

#[test]
fn e6_theta_from_level_three_forms() {
    let theta = i3(9)
        .pow_int(3)
        .unwrap()
        .add(&delta3(9).pow_int(3).unwrap().scale(&int(54)))
        .unwrap();
    assert_eq!(theta, QSeries::from_integers(int(0), &E6_THETA));
}

#[test]
fn five_sixths_row_and_partner() {
    let f1 = character_series(&rat(5, 6), 6).unwrap();
    assert_eq!(f1.exponent(), &rat(5, 6));
    assert_eq!(ints(&f1, 6), vec![1, 52, 1106, 14808, 147239, 1183780]);
    let f2 = character_series(&rat(-2, 3), 4).unwrap();
    assert_eq!(f2.exponent(), &rat(-2, 3));
    assert_eq!(ints(&f2, 4), vec![1, -272, -34696, -1058368]);
}

#[test]
fn non_integral_rows() {
    let f = character_series(&rat(10, 3), 6).unwrap();
    assert_eq!(f.coeff(3), &rat(1541266112, 323));
    assert_eq!(f.coeff(5), &rat(264979509920, 17));
    for (a, idx) in [
        ((35, 12), 2),
        ((35, 24), 2),
        ((47, 60), 2),
        ((10, 3), 2),
        ((5, 4), 2),
    ] {
        let f = character_series(&rat(a.0, a.1), 4).unwrap();
        assert_eq!(f.first_non_integral().map(|(i, _)| i), Some(idx));
    }
}
