//! Exhaustive search for singular points of a plane sextic over `GF(p)` and
//! `GF(p^2)`.

use std::fmt;

use serde::Serialize;

use crate::algebra_core::{Field, MultiPoly};
use crate::error::{Error, Result};

/// `GF(p^2)` as pairs `a + b w` with `w^2 = r` for a fixed non-residue `r`.
#[derive(Clone, Copy, Debug)]
struct Gf2 {
    p: u64,
    r: u64,
}

type E2 = (u64, u64);

impl Gf2 {
    fn new(p: u64) -> Self {
        let r = (2..p).find(|&r| pow_mod(r, (p - 1) / 2, p) == p - 1).expect("odd prime has a non-residue");
        Self { p, r }
    }

    fn add(&self, x: E2, y: E2) -> E2 {
        ((x.0 + y.0) % self.p, (x.1 + y.1) % self.p)
    }

    fn mul(&self, x: E2, y: E2) -> E2 {
        let p = self.p;
        ((x.0 * y.0 + x.1 * y.1 % p * self.r) % p, (x.0 * y.1 + x.1 * y.0) % p)
    }

    fn pow(&self, x: E2, e: u32) -> E2 {
        (0..e).fold((1, 0), |acc, _| self.mul(acc, x))
    }

    fn element(&self, i: u64) -> E2 {
        (i % self.p, i / self.p)
    }

    fn format(&self, x: E2) -> String {
        match x {
            (a, 0) => a.to_string(),
            (0, b) => format!("{b}w"),
            (a, b) => format!("{a}+{b}w"),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Polynomial with `GF(p)` coefficients as plain residues.
struct Residues(Vec<([u32; 3], u64)>);

impl Residues {
    fn new(f: &MultiPoly) -> Self {
        Self(f.terms().map(|(e, c)| (*e, c.as_fp().expect("prime field").value())).collect())
    }

    fn eval(&self, k: &Gf2, pt: [E2; 3]) -> E2 {
        self.0.iter().fold((0, 0), |acc, (e, c)| {
            let mut t = (*c, 0);
            for (x, &n) in pt.iter().zip(e) {
                t = k.mul(t, k.pow(*x, n));
            }
            k.add(acc, t)
        })
    }
}

/// Outcome of [`smoothness_probe`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ProbeVerdict {
    /// No common zero of the sextic and its partials over the listed fields.
    /// Evidence only: points over larger extensions are not examined.
    NoSingularPoint { fields: Vec<String> },
    /// A point where the sextic and all partials vanish; coordinates in
    /// `GF(p^2)` are written `a+bw` with `w^2` the stated non-residue.
    SingularWitness { field: String, point: [String; 3], nonresidue: u64 },
}

impl ProbeVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, ProbeVerdict::NoSingularPoint { .. })
    }
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeVerdict::NoSingularPoint { fields } => {
                write!(f, "no singular point over {} (probe, not a proof)", fields.join(", "))
            }
            ProbeVerdict::SingularWitness { field, point, .. } => {
                write!(f, "singular witness ({}) over {field}", point.join(","))
            }
        }
    }
}

/// Points of the projective plane over a field with `q` elements, first
/// nonzero coordinate 1, in the order `(1,y,z)`, `(0,1,z)`, `(0,0,1)`.
pub fn projective_plane_points(q: u64) -> impl Iterator<Item = [u64; 3]> {
    let a = (0..q).flat_map(move |y| (0..q).map(move |z| [1, y, z]));
    let b = (0..q).map(|z| [0, 1, z]);
    a.chain(b).chain(std::iter::once([0, 0, 1]))
}

/// Checks that the sextic and its three partials have no common projective
/// zero over `GF(p)`, and also over `GF(p^2)` when `extension` is set.
pub fn smoothness_probe(sextic: &MultiPoly, extension: bool) -> Result<ProbeVerdict> {
    let Field::Prime(p) = sextic.field() else {
        return Err(Error::InfiniteField);
    };
    if sextic.homogeneous_degree() != Some(6) {
        return Err(Error::ExpectedSextic);
    }
    let k = Gf2::new(p);
    let polys: Vec<Residues> =
        std::iter::once(Residues::new(sextic)).chain((0..3).map(|i| Residues::new(&sextic.partial(i)))).collect();
    let mut fields = Vec::new();
    let degrees: &[u32] = if extension { &[1, 2] } else { &[1] };
    for &deg in degrees {
        let q = p.pow(deg);
        let name = if deg == 1 { format!("GF({p})") } else { format!("GF({p}^2)") };
        for pt in projective_plane_points(q) {
            let pt = pt.map(|i| k.element(i));
            if polys.iter().all(|f| f.eval(&k, pt) == (0, 0)) {
                return Ok(ProbeVerdict::SingularWitness {
                    field: name,
                    point: pt.map(|x| k.format(x)),
                    nonresidue: k.r,
                });
            }
        }
        fields.push(name);
    }
    Ok(ProbeVerdict::NoSingularPoint { fields })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial(f: Field, e: [u32; 3]) -> MultiPoly {
        MultiPoly::monomial(f.one(), e).unwrap()
    }

    #[test]
    fn product_of_squares_is_singular_at_first_point() {
        let f = Field::prime(7).unwrap();
        let v = smoothness_probe(&monomial(f, [2, 2, 2]), true).unwrap();
        assert_eq!(
            v,
            ProbeVerdict::SingularWitness { field: "GF(7)".into(), point: ["1", "0", "0"].map(String::from), nonresidue: 3 }
        );
    }

    #[test]
    fn fermat_sextic_passes() {
        let f = Field::prime(7).unwrap();
        let fermat = monomial(f, [6, 0, 0]).add(&monomial(f, [0, 6, 0])).add(&monomial(f, [0, 0, 6]));
        let v = smoothness_probe(&fermat, true).unwrap();
        assert!(v.passed());
        assert_eq!(v, ProbeVerdict::NoSingularPoint { fields: vec!["GF(7)".into(), "GF(7^2)".into()] });
        let scaled = fermat.scale(&f.from_i64(3));
        assert_eq!(smoothness_probe(&scaled, true).unwrap(), v);
    }

    #[test]
    fn rejects_wrong_degree_and_infinite_field() {
        let f = Field::prime(5).unwrap();
        assert_eq!(smoothness_probe(&monomial(f, [2, 2, 1]), false), Err(Error::ExpectedSextic));
        let q = monomial(Field::Rational, [2, 2, 2]);
        assert_eq!(smoothness_probe(&q, false), Err(Error::InfiniteField));
    }

    #[test]
    fn plane_point_count() {
        assert_eq!(projective_plane_points(7).count(), 57);
        assert_eq!(projective_plane_points(49).count(), 49 * 49 + 49 + 1);
    }

    #[test]
    fn extension_arithmetic() {
        let k = Gf2::new(7);
        // w^2 = r, and every nonzero element has order dividing 48.
        assert_eq!(k.mul((0, 1), (0, 1)), (k.r, 0));
        for i in 1..49 {
            assert_eq!(k.pow(k.element(i), 48), (1, 0));
        }
    }
}
