use num_traits::Zero;
use rayon::prelude::*;

use super::context::RepContext;
use super::RepError;
use crate::ehresmann::build_category;
use crate::linalg::{as_integer, format_rational, rat, span_rank, Rational};
use crate::young::{central_idempotent, factorial, hook_dimension, mn_character, partitions_of, Partition, SymmetricGroup};

/// Cartan matrix over the representation index: entry `(α, β)` is the
/// multiplicity of the simple `α` in the projective `β`.
///
/// Computed in the category algebra as `dim(z_α·kC·z_β) / (f^α f^β)`, where
/// `z` is the central idempotent of the endomorphism group at the
/// representative object.
pub fn cartan_matrix_ei(ctx: &RepContext<'_>) -> Result<Vec<Vec<u64>>, RepError> {
    let b = ctx.ehresmann();
    let cat = build_category(b);
    let object = |e: usize| b.projections().binary_search(&e).expect("a projection");
    let n = ctx.index().len();

    // Central idempotents as (morphism, coefficient) lists.
    let mut idempotents = Vec::with_capacity(n);
    for i in 0..n {
        let e = ctx.projection(i);
        let ident = ctx.identification(i);
        let group = ctx.class(i, super::ClassKind::L).group();
        let mut ends = cat.endomorphisms(object(e));
        ends.sort_unstable();
        if ends != group.elements {
            return Err(RepError::EndomorphismMismatch(e));
        }
        let z = central_idempotent(ident.symmetric_group(), &ctx.index().entries[i].lambda);
        let terms: Vec<(usize, Rational)> = group
            .elements
            .iter()
            .enumerate()
            .map(|(local, &g)| (g, z[ident.to_symmetric(local)].clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        idempotents.push(terms);
    }

    (0..n)
        .into_par_iter()
        .map(|alpha| {
            (0..n)
                .map(|beta| {
                    let (ea, eb) = (ctx.projection(alpha), ctx.projection(beta));
                    let hom = cat.hom(object(eb), object(ea));
                    let width = hom.len();
                    let position = |m: usize| hom.binary_search(&m).expect("a morphism in the hom-set");
                    let vectors = hom.iter().map(|&m| {
                        let mut v = vec![Rational::zero(); width];
                        for (g, zg) in &idempotents[alpha] {
                            let gm = cat.compose(*g, m).expect("composable");
                            for (h, zh) in &idempotents[beta] {
                                let x = cat.compose(gm, *h).expect("composable");
                                v[position(x)] += zg * zh;
                            }
                        }
                        v
                    });
                    let dim = span_rank(width, vectors) as u64;
                    let scale = hook_dimension(&ctx.index().entries[alpha].lambda)
                        * hook_dimension(&ctx.index().entries[beta].lambda);
                    if !dim.is_multiple_of(scale) {
                        return Err(RepError::NonIntegral {
                            what: format!("Cartan entry ({alpha}, {beta})"),
                            value: format!("{dim}/{scale}"),
                        });
                    }
                    Ok(dim / scale)
                })
                .collect()
        })
        .collect()
}

/// All surjections `{0..k} → {0..r}` in lexicographic order.
pub fn onto_maps(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut f = vec![0usize; k];
    loop {
        let mut hit = vec![false; r];
        for &y in &f {
            hit[y] = true;
        }
        if hit.iter().all(|&h| h) {
            out.push(f.clone());
        }
        let Some(i) = (0..k).rev().find(|&i| f[i] + 1 < r) else {
            return out;
        };
        f[i] += 1;
        for x in &mut f[i + 1..] {
            *x = 0;
        }
    }
}

/// Multiplicity of `S^α` in `kE(k, r) ⊗_{kS_k} S^β`, where `E(k, r)` is the
/// set of surjections with `S_r` acting by post- and `S_k` by
/// pre-composition. Uses the bimodule character
/// `g ↦ (1/k!) Σ_σ #{f : g∘f∘σ = f}·χ_β(σ⁻¹)`.
pub fn cartan_entry_ptn(alpha: &Partition, beta: &Partition) -> Result<u64, RepError> {
    let (r, k) = (alpha.weight(), beta.weight());
    let maps = onto_maps(k, r);
    let sr = SymmetricGroup::new(r);
    let sk = SymmetricGroup::new(k);
    let chi_beta: Vec<i64> = sk
        .elements()
        .iter()
        .map(|s| mn_character(beta, &s.inverse().cycle_type()).expect("weights agree"))
        .collect();
    let mut total = rat(0);
    for g in sr.elements() {
        let mut character = 0i64;
        for (sigma, chi) in sk.elements().iter().zip(&chi_beta) {
            let fixed = maps
                .iter()
                .filter(|f| (0..k).all(|x| g.apply(f[sigma.apply(x)]) == f[x]))
                .count() as i64;
            character += fixed * chi;
        }
        let chi_alpha = mn_character(alpha, &g.cycle_type()).expect("weights agree");
        total += rat(character * chi_alpha);
    }
    let value = total / rat((factorial(k) * factorial(r)) as i64);
    match as_integer(&value) {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(RepError::NonIntegral {
            what: format!("constituent multiplicity of {alpha} in the module of {beta}"),
            value: format_rational(&value),
        }),
    }
}

/// The full formula-side Cartan matrix of `ℚPT_n`, indexed by all
/// partitions of `0..=n` in block order.
pub fn cartan_matrix_ptn(n: usize) -> Result<(Vec<Partition>, Vec<Vec<u64>>), RepError> {
    let labels: Vec<Partition> = (0..=n).flat_map(partitions_of).collect();
    let matrix = labels
        .iter()
        .map(|a| labels.iter().map(|b| cartan_entry_ptn(a, b)).collect())
        .collect::<Result<_, _>>()?;
    Ok((labels, matrix))
}

/// Zero below the diagonal blocks and the identity on them, with
/// `blocks[i]` giving the block of row and column `i`.
pub fn is_block_upper_unitriangular(blocks: &[usize], m: &[Vec<u64>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &c)| {
            if blocks[i] > blocks[j] {
                c == 0
            } else if blocks[i] == blocks[j] {
                c == u64::from(i == j)
            } else {
                true
            }
        })
    })
}
