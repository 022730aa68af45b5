use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{smith_normal_form, IntegerMatrix};

use super::groups::FGAbelianGroup;
use super::torsion::bso4_group;

/// `G_0 → G_1 → ... → G_m` with maps written on the standard generators of
/// each group: `maps[i]` is a `gens(G_{i+1}) × gens(G_i)` integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceInstance {
    groups: Vec<FGAbelianGroup>,
    maps: Vec<IntegerMatrix>,
}

/// Whether every column of `m` lies in the lattice spanned by the columns of
/// `lattice`.
fn columns_in_lattice(m: &IntegerMatrix, lattice: &IntegerMatrix) -> bool {
    (0..m.cols()).all(|j| in_lattice(&m.column(j), lattice))
}

/// Solves `lattice · z = v` over the integers via `U L V = D`.
fn in_lattice(v: &[BigInt], lattice: &IntegerMatrix) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if lattice.cols() == 0 {
        return false;
    }
    let snf = smith_normal_form(lattice);
    let uv = snf.u.apply(v);
    uv.iter()
        .enumerate()
        .all(|(i, x)| match snf.diagonal.get(i) {
            Some(d) if !d.is_zero() => x.is_multiple_of(d),
            _ => x.is_zero(),
        })
}

/// Generators of the integer kernel of `m`.
fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols()).map(|j| snf.v.column(j)).collect()
}

impl ExactSequenceInstance {
    /// Checks dimensions, that each map is well defined on the quotient
    /// presentations, and that consecutive maps compose to zero.
    pub fn new(groups: Vec<FGAbelianGroup>, maps: Vec<IntegerMatrix>) -> Result<Self> {
        if groups.len() != maps.len() + 1 {
            return Err(Error::NotComposable(format!(
                "{} groups need {} maps, got {}",
                groups.len(),
                groups.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, f) in maps.iter().enumerate() {
            let (src, dst) = (&groups[i], &groups[i + 1]);
            if f.cols() != src.generator_count() || f.rows() != dst.generator_count() {
                return Err(Error::NotComposable(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    dst.generator_count(),
                    src.generator_count()
                )));
            }
            let image_of_relations = f.mul(&src.relation_matrix())?;
            if !columns_in_lattice(&image_of_relations, &dst.relation_matrix()) {
                return Err(Error::NotComposable(format!("map {i} is not well defined")));
            }
        }
        for i in 1..maps.len() {
            let gf = maps[i].mul(&maps[i - 1])?;
            if !columns_in_lattice(&gf, &groups[i + 1].relation_matrix()) {
                return Err(Error::NotComposable(format!(
                    "maps {} and {i} do not compose to zero",
                    i - 1
                )));
            }
        }
        Ok(ExactSequenceInstance { groups, maps })
    }

    pub fn groups(&self) -> &[FGAbelianGroup] {
        &self.groups
    }

    pub fn maps(&self) -> &[IntegerMatrix] {
        &self.maps
    }
}

/// Exactness at interior node `i` (`0 < i < len - 1`): every `x` with
/// `g(x) = 0` in `G_{i+1}` lies in `im f + relations of G_i`.
pub fn exactness_at(seq: &ExactSequenceInstance, i: usize) -> Result<bool> {
    if i == 0 || i + 1 >= seq.groups.len() {
        return Err(Error::InvalidArgument(format!(
            "{i} is not an interior node"
        )));
    }
    let (f, g) = (&seq.maps[i - 1], &seq.maps[i]);
    let (here, next) = (&seq.groups[i], &seq.groups[i + 1]);
    let n = here.generator_count();
    if n == 0 {
        return Ok(true);
    }
    // x with g x = R_next y  ⟺  (x, y) ∈ ker [g | -R_next]
    let neg_rel = next.relation_matrix();
    let neg_rel = IntegerMatrix::from_columns(
        neg_rel.rows(),
        &(0..neg_rel.cols())
            .map(|j| neg_rel.column(j).into_iter().map(|x| -x).collect())
            .collect::<Vec<_>>(),
    );
    let stacked = g.hcat(&neg_rel)?;
    let image = f.hcat(&here.relation_matrix())?;
    Ok(kernel_basis(&stacked)
        .into_iter()
        .all(|v| in_lattice(&v[..n], &image)))
}

/// Exactness at every interior node, decided with Smith normal forms.
pub fn check_exact(seq: &ExactSequenceInstance) -> Result<bool> {
    for i in 1..seq.groups.len().saturating_sub(1) {
        if !exactness_at(seq, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn map(rows: usize, cols: usize, entries: &[i64]) -> IntegerMatrix {
    IntegerMatrix::from_i64(rows, cols, entries).expect("sized entries")
}

/// The Gysin sequence of the circle bundle `BSO(4) → BGO(4)°` in low
/// degrees, with `H^{1,2,3}(BGO(4)°) = (h1, h2, h3)` and `H^*(BSO(4))` from
/// the integral table:
///
/// `0 → H⁰(B) → H⁰(E) → H^{-1}(B) → H¹(B) → H¹(E) → H⁰(B) →e H²(B) → H²(E)
///  → H¹(B) →e H³(B) → H³(E) → H²(B)`
///
/// Maps are the identity where both ends are `Z` or `Z/2`, cup with the
/// Euler class as `×1` on `H⁰ → H²`, and zero into the free `H²(B)`.
pub fn bgo4_gysin_instance(
    h1: FGAbelianGroup,
    h2: FGAbelianGroup,
    h3: FGAbelianGroup,
) -> Result<ExactSequenceInstance> {
    let z = FGAbelianGroup::free(1);
    let zero = FGAbelianGroup::trivial();
    let groups = vec![
        zero.clone(),
        z.clone(),
        bso4_group(0)?,
        zero,
        h1.clone(),
        bso4_group(1)?,
        z,
        h2.clone(),
        bso4_group(2)?,
        h1,
        h3,
        bso4_group(3)?,
        h2,
    ];
    let maps = groups
        .windows(2)
        .enumerate()
        .map(|(i, pair)| connecting_map(i, &pair[0], &pair[1]))
        .collect();
    ExactSequenceInstance::new(groups, maps)
}

/// Identity-like map between cyclic groups where natural, zero otherwise.
fn connecting_map(i: usize, src: &FGAbelianGroup, dst: &FGAbelianGroup) -> IntegerMatrix {
    let (r, c) = (dst.generator_count(), src.generator_count());
    // the last map H³(E) → H²(B) lands in a free group from a torsion one
    let natural = i != 11 && r == 1 && c == 1 && {
        let (a, b) = (&src.generator_orders()[0], &dst.generator_orders()[0]);
        a == b || (b.is_one() && !a.is_zero())
    };
    if natural {
        map(1, 1, &[1])
    } else {
        IntegerMatrix::zeros(r, c)
    }
}
