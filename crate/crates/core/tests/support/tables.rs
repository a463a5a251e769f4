//! Golden Darboux polynomials of degree <= 3 for the open and periodic
//! Kac-van Moerbeke systems and for `(r, s, t) = (5, 1, 1)`.
//!
//! Rows with free constants are stored as their list of components: the row
//! is `c1 * components[0] + c2 * components[1] + ...`.

use darboux_core::{LVParams, LinForm, Poly};

pub struct Row {
    pub table: u32,
    pub row: u32,
    pub components: &'static [&'static str],
    pub cofactor: [i64; 3],
}

impl Row {
    pub fn polys(&self) -> Vec<Poly> {
        self.components.iter().map(|c| c.parse().expect("golden poly")).collect()
    }

    /// A combination with all constants non-zero.
    pub fn generic(&self) -> Poly {
        let weights = ["1", "-7/3", "5/2"];
        self.polys()
            .iter()
            .zip(weights)
            .map(|(f, w)| f.scale(&darboux_core::parse_rational(w).unwrap()))
            .fold(Poly::zero(), |acc, f| &acc + &f)
    }

    pub fn degree(&self) -> u32 {
        self.polys()[0].degree().expect("non-zero")
    }

    pub fn cofactor(&self) -> LinForm {
        let [a, b, c] = self.cofactor;
        LinForm::from_ints(a, b, c)
    }

    pub fn label(&self) -> String {
        format!("table {} row {}", self.table, self.row)
    }
}

pub struct GoldenSet {
    pub name: &'static str,
    pub params: LVParams,
    pub rows: Vec<Row>,
}

const fn row(table: u32, row: u32, components: &'static [&'static str], cofactor: [i64; 3]) -> Row {
    Row { table, row, components, cofactor }
}

pub fn golden_sets() -> Vec<GoldenSet> {
    vec![
        GoldenSet { name: "km", params: LVParams::km(), rows: km_rows() },
        GoldenSet { name: "periodic", params: LVParams::periodic_km(), rows: periodic_rows() },
        GoldenSet { name: "s_eq_t", params: LVParams::from_ints(5, 1, 1), rows: coincidence_rows() },
    ]
}

fn km_rows() -> Vec<Row> {
    vec![
        row(1, 1, &["x1"], [0, 1, 0]),
        row(1, 2, &["x2"], [-1, 0, 1]),
        row(1, 3, &["x3"], [0, -1, 0]),
        row(1, 4, &["x1+x2+x3"], [0, 0, 0]),
        row(2, 1, &["x1^2"], [0, 2, 0]),
        row(2, 2, &["x2^2"], [-2, 0, 2]),
        // Listed as -x2; the cofactor of x3^2 is -2 x2.
        row(2, 3, &["x3^2"], [0, -2, 0]),
        row(2, 4, &["x1*x2"], [-1, 1, 1]),
        row(2, 5, &["x1*x3"], [0, 0, 0]),
        row(2, 6, &["x2*x3"], [-1, -1, 1]),
        row(2, 7, &["x1*(x1+x2+x3)"], [0, 1, 0]),
        row(2, 8, &["x2*(x1+x2+x3)"], [-1, 0, 1]),
        row(2, 9, &["x3*(x1+x2+x3)"], [0, -1, 0]),
        row(2, 10, &["x1^2+x2^2+x3^2+2*x1*x2+2*x2*x3", "x1*x3"], [0, 0, 0]),
        row(3, 1, &["x1^3"], [0, 3, 0]),
        row(3, 2, &["x2^3"], [-3, 0, 3]),
        row(3, 3, &["x3^3"], [0, -3, 0]),
        row(3, 4, &["x1^2*x2"], [-1, 2, 1]),
        row(3, 5, &["x2^2*x1"], [-2, 1, 2]),
        row(3, 6, &["x2^2*x3"], [-2, -1, 2]),
        row(3, 7, &["x3^2*x2"], [-1, -2, 1]),
        row(3, 8, &["x1^2*(x1+x2+x3)"], [0, 2, 0]),
        row(3, 9, &["x2^2*(x1+x2+x3)"], [-2, 0, 2]),
        row(3, 10, &["x3^2*(x1+x2+x3)"], [0, -2, 0]),
        row(3, 11, &["x1*x2*(x1+x2+x3)"], [-1, 1, 1]),
        row(3, 12, &["x2*x3*(x1+x2+x3)"], [-1, -1, 1]),
        // Listed without the 2 x2 x3 term inside the bracket.
        row(3, 13, &["x1*(x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x2*x3)", "x1^2*x3"], [0, 1, 0]),
        row(3, 14, &["x2*(x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x2*x3)", "x1*x2*x3"], [-1, 0, 1]),
        row(3, 15, &["x3*(x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x2*x3)", "x3^2*x1"], [0, -1, 0]),
    ]
}

fn periodic_rows() -> Vec<Row> {
    vec![
        row(4, 1, &["x1"], [0, 1, -1]),
        row(4, 2, &["x2"], [-1, 0, 1]),
        row(4, 3, &["x3"], [1, -1, 0]),
        row(4, 4, &["x1+x2+x3"], [0, 0, 0]),
        row(5, 1, &["x1^2"], [0, 2, -2]),
        row(5, 2, &["x2^2"], [-2, 0, 2]),
        row(5, 3, &["x3^2"], [2, -2, 0]),
        row(5, 4, &["x1*x2"], [-1, 1, 0]),
        row(5, 5, &["x1*x3"], [1, 0, -1]),
        row(5, 6, &["x2*x3"], [0, -1, 1]),
        row(5, 7, &["x1*(x1+x2+x3)"], [0, 1, -1]),
        row(5, 8, &["x2*(x1+x2+x3)"], [-1, 0, 1]),
        row(5, 9, &["x3*(x1+x2+x3)"], [1, -1, 0]),
        row(5, 10, &["(x1+x2+x3)^2"], [0, 0, 0]),
        row(6, 1, &["x1^3"], [0, 3, -3]),
        row(6, 2, &["x2^3"], [-3, 0, 3]),
        row(6, 3, &["x3^3"], [3, -3, 0]),
        row(6, 4, &["x1^2*x2"], [-1, 2, -1]),
        row(6, 5, &["x1^2*x3"], [1, 1, -2]),
        row(6, 6, &["x2^2*x1"], [-2, 1, 1]),
        row(6, 7, &["x2^2*x3"], [-1, -1, 2]),
        row(6, 8, &["x3^2*x1"], [2, -1, -1]),
        row(6, 9, &["x3^2*x2"], [1, -2, 1]),
        row(6, 10, &["x1*(x1+x2+x3)^2"], [0, 1, -1]),
        row(6, 11, &["x2*(x1+x2+x3)^2"], [-1, 0, 1]),
        row(6, 12, &["x3*(x1+x2+x3)^2"], [1, -1, 0]),
        row(6, 13, &["x1^2*(x1+x2+x3)"], [0, 2, -2]),
        row(6, 14, &["x2^2*(x1+x2+x3)"], [-2, 0, 2]),
        row(6, 15, &["x3^2*(x1+x2+x3)"], [2, -2, 0]),
        row(6, 16, &["x1*x2*(x1+x2+x3)"], [-1, 1, 0]),
        row(6, 17, &["x1*x3*(x1+x2+x3)"], [1, 0, -1]),
        row(6, 18, &["x2*x3*(x1+x2+x3)"], [0, -1, 1]),
        row(6, 19, &["x1*x2*x3"], [0, 0, 0]),
        row(
            6,
            20,
            &[
                "x1^3+x2^3+x3^3+3*x1^2*x2+3*x1^2*x3+3*x2^2*x1+3*x2^2*x3+3*x3^2*x1+3*x3^2*x2",
                "x1*x2*x3",
            ],
            [0, 0, 0],
        ),
    ]
}

fn coincidence_rows() -> Vec<Row> {
    vec![
        row(7, 1, &["x1+x2"], [0, 0, 1]),
        row(8, 1, &["x1*(x1+x2)"], [0, 5, 2]),
        row(8, 2, &["x2*(x1+x2)"], [-5, 0, 2]),
        row(8, 3, &["x3*(x1+x2)"], [-1, -1, 1]),
        row(8, 4, &["(x1+x2)^2"], [0, 0, 2]),
        row(8, 5, &["(x1+x2)*(x1+x2+x3)"], [0, 0, 1]),
        row(9, 1, &["(x1+x2)^3"], [0, 0, 3]),
        row(9, 2, &["x1*(x1+x2)^2"], [0, 5, 3]),
        row(9, 3, &["x2*(x1+x2)^2"], [-5, 0, 3]),
        row(9, 4, &["x3*(x1+x2)^2"], [-1, -1, 2]),
        row(9, 5, &["x1^2*(x1+x2)"], [0, 10, 3]),
        row(9, 6, &["x2^2*(x1+x2)"], [-10, 0, 3]),
        row(9, 7, &["x3^2*(x1+x2)"], [-2, -2, 1]),
        row(9, 8, &["x1*x2*(x1+x2)"], [-5, 5, 3]),
        row(9, 9, &["x1*x3*(x1+x2)"], [-1, 4, 2]),
        row(9, 10, &["x2*x3*(x1+x2)"], [-6, -1, 2]),
        row(9, 11, &["x1*(x1+x2)*(x1+x2+x3)"], [0, 5, 2]),
        row(9, 12, &["x2*(x1+x2)*(x1+x2+x3)"], [-5, 0, 2]),
        row(9, 13, &["x3*(x1+x2)*(x1+x2+x3)"], [-1, -1, 1]),
        row(9, 14, &["(x1+x2)*(x1+x2+x3)^2"], [0, 0, 1]),
        row(9, 15, &["(x1+x2)^2*(x1+x2+x3)"], [0, 0, 2]),
    ]
}

/// The two printed rows that do not check out, in their literal form.
pub struct LiteralTypo {
    pub table: u32,
    pub row: u32,
    pub poly: &'static str,
    /// Printed cofactor.
    pub cofactor: [i64; 3],
    /// Whether the printed polynomial itself is Darboux.
    pub poly_is_darboux: bool,
}

pub fn literal_typos() -> Vec<LiteralTypo> {
    vec![
        LiteralTypo { table: 2, row: 3, poly: "x3^2", cofactor: [0, -1, 0], poly_is_darboux: true },
        LiteralTypo {
            table: 3,
            row: 13,
            poly: "x1*(x1^2 + x2^2 + x3^2 + 2*x1*x2) + x1^2*x3",
            cofactor: [0, 1, 0],
            poly_is_darboux: false,
        },
    ]
}
