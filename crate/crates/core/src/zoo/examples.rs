use crate::ehresmann::{BiUnaryStructure, Ehresmann};
use crate::linalg::{rat, span_rank, Matrix};

use super::{tabulate, PartialMap, Relation};

/// A pair `(a, b)` in `T_2^op × T_2`, multiplied as `(a, b)(c, d) = (c∘a, b∘d)`.
type OpPair = (PartialMap, PartialMap);

fn t2(name: &str) -> PartialMap {
    match name {
        "1" => PartialMap::new(&[Some(0), Some(0)]),
        "2" => PartialMap::new(&[Some(1), Some(1)]),
        "id" => PartialMap::new(&[Some(0), Some(1)]),
        _ => unreachable!("not a named map of T_2: {name}"),
    }
}

fn t2_name(f: &PartialMap) -> &'static str {
    ["1", "2", "id"]
        .into_iter()
        .find(|n| t2(n) == *f)
        .unwrap_or("?")
}

/// Six pairs in `T_2^op × T_2` (constant maps written `1`, `2`), with the
/// projections `(1,1)`, `(1,id)`, `(id,1)`. EI, but neither left nor right
/// restriction.
///
/// Elements in order: `(1,1) (2,1) (1,2) (2,2) (1,id) (id,1)`.
pub fn ei_neither_restriction() -> BiUnaryStructure {
    let names = [
        ("1", "1"),
        ("2", "1"),
        ("1", "2"),
        ("2", "2"),
        ("1", "id"),
        ("id", "1"),
    ];
    let elements: Vec<OpPair> = names.iter().map(|&(a, b)| (t2(a), t2(b))).collect();
    let (s, _) = tabulate(
        &elements,
        |(a, b), (c, d)| (c.after(a), b.after(d)),
        |(a, b)| format!("({},{})", t2_name(a), t2_name(b)),
    )
    .expect("the six pairs are closed");
    BiUnaryStructure::from_projections(s, vec![0, 4, 5]).expect("unique projections")
}

/// Five relations on three points, `e = 1_{1,2}`, `f = 1_{3}`,
/// `a = {(3,1),(3,2)}`, `g = {(1,2),(2,1)}` and `0`, in that order, with
/// projections `e, f, 0`. Restriction and EI, yet `ea = ga` while
/// `ea⁺ ≠ ga⁺`.
pub fn non_embeddable_relations() -> BiUnaryStructure {
    let elements = [
        Relation::partial_identity(3, &[0, 1]),
        Relation::partial_identity(3, &[2]),
        Relation::new(3, &[(2, 0), (2, 1)]),
        Relation::new(3, &[(0, 1), (1, 0)]),
        Relation::new(3, &[]),
    ];
    let names = ["e", "f", "a", "g", "0"];
    let (s, index) = tabulate(&elements, |x, y| x.after(y), |r| {
        elements
            .iter()
            .position(|x| x == r)
            .map_or_else(|| r.to_string(), |i| names[i].to_string())
    })
    .expect("the five relations are closed");
    let star = elements
        .iter()
        .map(|r| index[&Relation::partial_identity(3, &r.domain())])
        .collect();
    let plus = elements
        .iter()
        .map(|r| index[&Relation::partial_identity(3, &r.image())])
        .collect();
    BiUnaryStructure::new(s, star, plus, vec![0, 1, 4]).expect("valid projections")
}

/// Relations on two points with 0, 1, 2 or 4 pairs, ordered by bit pattern.
/// Ehresmann with a projection in every J-class, but not EI.
pub fn non_ei_relations() -> BiUnaryStructure {
    let elements: Vec<Relation> = Relation::all(2)
        .into_iter()
        .filter(|r| matches!(r.len(), 0 | 1 | 2 | 4))
        .collect();
    let (s, index) =
        tabulate(&elements, |x, y| x.after(y), Relation::to_string).expect("closed submonoid");
    let idx = |set: &[usize]| index[&Relation::partial_identity(2, set)];
    let star = elements.iter().map(|r| idx(&r.domain())).collect();
    let plus = elements.iter().map(|r| idx(&r.image())).collect();
    let projections = [&[][..], &[0], &[1], &[0, 1]].iter().map(|d| idx(d)).collect();
    BiUnaryStructure::new(s, star, plus, projections).expect("valid projections")
}

/// Images of the six elements of [`ei_neither_restriction`] in the upper
/// triangular 3×3 matrices, in element order.
pub fn ut3_images() -> Vec<Matrix> {
    let m = |rows: [[i64; 3]; 3]| {
        Matrix::from_i64_rows(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>())
    };
    vec![
        m([[0, 0, 0], [0, 1, 0], [0, 0, 0]]),
        m([[0, 0, 0], [0, 1, 1], [0, 0, 0]]),
        m([[0, 1, 0], [0, 1, 0], [0, 0, 0]]),
        m([[0, 1, 1], [0, 1, 1], [0, 0, 0]]),
        m([[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
        m([[0, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ut3Report {
    /// First pair `(x, y)` with `Φ(xy) ≠ Φ(x)Φ(y)`.
    pub failure: Option<(usize, usize)>,
    pub upper_triangular: bool,
    pub rank: usize,
}

impl Ut3Report {
    /// The matrix assignment extends to an algebra isomorphism onto `UT_3`.
    pub fn is_isomorphism(&self) -> bool {
        self.failure.is_none() && self.upper_triangular && self.rank == 6
    }
}

/// Checks that [`ut3_images`] is multiplicative on all pairs and that the
/// images form a basis of the upper triangular matrices.
pub fn ut3_isomorphism_check() -> Ut3Report {
    let s = ei_neither_restriction();
    let images = ut3_images();
    let n = s.size();
    let failure = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| images[s.product(x, y)] != images[x].mul(&images[y]));
    let upper_triangular = images
        .iter()
        .all(|m| (0..3).all(|i| (0..i).all(|j| m[(i, j)] == rat(0))));
    let rank = span_rank(
        9,
        images
            .iter()
            .map(|m| (0..3).flat_map(|i| m.row(i).to_vec()).collect::<Vec<_>>()),
    );
    Ut3Report {
        failure,
        upper_triangular,
        rank,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyReport {
    pub injective: bool,
    /// First `(a, b)` with `Φ(ab) ≠ Φ(a)∘Φ(b)`.
    pub homomorphism_failure: Option<(usize, usize)>,
    /// First `a` with `Φ(a*) ≠ Φ(a)*`.
    pub star_failure: Option<usize>,
    /// First `a` with `Φ(a⁺) ≠ Φ(a)⁺`.
    pub plus_failure: Option<usize>,
}

impl CayleyReport {
    pub fn is_embedding(&self) -> bool {
        self.injective
            && self.homomorphism_failure.is_none()
            && self.star_failure.is_none()
            && self.plus_failure.is_none()
    }
}

/// The left regular representation into partial functions on the elements:
/// `Φ(a)` sends `x` to `ax` whenever `a*x = x`.
pub fn cayley_map(b: &Ehresmann) -> Vec<PartialMap> {
    let n = b.size();
    (0..n)
        .map(|a| {
            let values: Vec<Option<usize>> = (0..n)
                .map(|x| (b.product(b.star(a), x) == x).then(|| b.product(a, x)))
                .collect();
            PartialMap::new(&values)
        })
        .collect()
}

/// Tests whether [`cayley_map`] is an embedding of bi-unary semigroups.
pub fn cayley_embedding_check(b: &Ehresmann) -> CayleyReport {
    let n = b.size();
    let phi = cayley_map(b);
    let id_on = |dom: Vec<usize>| PartialMap::partial_identity(n, &dom);
    let mut sorted = phi.clone();
    sorted.sort();
    sorted.dedup();
    CayleyReport {
        injective: sorted.len() == n,
        homomorphism_failure: (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| phi[b.product(x, y)] != phi[x].after(&phi[y])),
        star_failure: (0..n).find(|&a| phi[b.star(a)] != id_on(phi[a].domain())),
        plus_failure: (0..n).find(|&a| phi[b.plus(a)] != id_on(phi[a].image())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehresmann::Ehresmann;

    #[test]
    fn six_pair_example_unary_maps() {
        let s = ei_neither_restriction();
        assert_eq!(s.size(), 6);
        assert_eq!(s.projections(), &[0, 4, 5]);
        assert_eq!(s.label(3), "(2,2)");
        assert_eq!(s.label(s.plus(3)), "(1,id)");
        assert_eq!(s.label(s.star(3)), "(id,1)");
    }

    #[test]
    fn six_pair_sandwich_set() {
        let s = ei_neither_restriction();
        let sandwich = s.base().sandwich_set(5, 4).unwrap();
        assert_eq!(sandwich, vec![0, 1, 2, 3]);
    }

    #[test]
    fn five_relation_products() {
        let s = non_embeddable_relations();
        let (e, a, g) = (0, 2, 3);
        assert_eq!(s.product(e, a), a);
        assert_eq!(s.product(g, a), a);
        assert_eq!(s.plus(a), e);
        assert_eq!(s.product(g, e), g);
        assert_eq!(s.label(4), "0");
    }

    #[test]
    fn twelve_relations() {
        let m = non_ei_relations();
        assert_eq!(m.size(), 12);
        assert_eq!(m.projections().len(), 4);
        assert!(m.base().identity().is_some());
    }

    #[test]
    fn ut3_is_an_isomorphism() {
        let r = ut3_isomorphism_check();
        assert_eq!(r.failure, None);
        assert_eq!(r.rank, 6);
        assert!(r.is_isomorphism());
        // The projection (1,1) goes to the middle matrix unit.
        let e22 = Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(ut3_images()[0], e22);
    }

    #[test]
    fn cayley_embedding_of_regular_part() {
        let s = Ehresmann::new(non_embeddable_relations()).unwrap();
        let regular = Ehresmann::new(s.substructure(&[0, 1, 3, 4]).unwrap()).unwrap();
        assert!(cayley_embedding_check(&regular).is_embedding());
        assert!(!cayley_embedding_check(&s).is_embedding());
    }
}
