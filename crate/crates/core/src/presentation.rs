//! The homology-cylinder data model: admissible presentations, validation
//! (the marking solve), the A/B/C Fox matrices, the Magnus matrix r₂, σ₂,
//! stacking, basis change, and mapping-class builders.
//!
//! An admissible presentation has generators split into three blocks over a
//! flat 1-based index space:
//!
//! ```text
//!   i₋(γ₁)…i₋(γ_{2g})   indices 1..=2g
//!   z₁…z_l              indices 2g+1..=2g+l
//!   i₊(γ₁)…i₊(γ_{2g})   indices 2g+l+1..=4g+l
//! ```
//!
//! and exactly 2g+l relators. At the N₂ level the classes of the i₋ and z
//! generators are solved in the basis {i₊(γᵢ)}; this solve is the k=2
//! instance of the i₊-identification that turns r′₂ into r₂.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::fracmat::FracMatrix;
use crate::intmat;
use crate::laurent::{ExpVec, LaurentPoly, Vars};
use crate::ratfunc::RatFunc;
use crate::word::{boundary_word, fox_derivative, Endomorphism, GroupRingElt, Word};

/// Which block a flat generator index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenBlock {
    IMinus(usize),
    Z(usize),
    IPlus(usize),
}

/// An admissible presentation of the fundamental group of a homology
/// cylinder over Σ_{g,1}. Relators are words over the flat generator
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePresentation {
    genus: usize,
    aux: usize,
    relators: Vec<Word>,
}

/// The marking data solved from a valid presentation: σ₂ ∈ GL(2g,ℤ) and the
/// monomial assignment sending every generator to its N₂-class in the
/// i₊-basis.
#[derive(Clone, Debug)]
pub struct MarkingData {
    pub sigma2: Vec<Vec<i64>>,
    /// Class of each generator (flat index order) as an exponent vector in
    /// the i₊-basis.
    pub assignment: Vec<ExpVec>,
}

impl AdmissiblePresentation {
    pub fn new(genus: usize, aux: usize, relators: Vec<Word>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::MarkingSolveFailed("genus must be ≥ 1".into()));
        }
        if relators.len() != 2 * genus + aux {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "expected {} relators for genus {} aux {}, got {}",
                    2 * genus + aux,
                    genus,
                    aux,
                    relators.len()
                ),
            });
        }
        let ngens = 4 * genus + aux;
        for (k, r) in relators.iter().enumerate() {
            if r.max_gen() > ngens {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("relator {} uses generator beyond index {}", k + 1, ngens),
                });
            }
        }
        Ok(AdmissiblePresentation {
            genus,
            aux,
            relators,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_gens(&self) -> usize {
        4 * self.genus + self.aux
    }

    pub fn block(&self, idx: usize) -> GenBlock {
        let g2 = 2 * self.genus;
        if idx <= g2 {
            GenBlock::IMinus(idx)
        } else if idx <= g2 + self.aux {
            GenBlock::Z(idx - g2)
        } else {
            GenBlock::IPlus(idx - g2 - self.aux)
        }
    }

    pub fn iminus_index(&self, i: usize) -> usize {
        i
    }

    pub fn z_index(&self, j: usize) -> usize {
        2 * self.genus + j
    }

    pub fn iplus_index(&self, i: usize) -> usize {
        2 * self.genus + self.aux + i
    }

    /// Integer exponent matrix: rows = generators (flat), cols = relators.
    fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_gens();
        let m = self.relators.len();
        let mut e = vec![vec![0i64; m]; n];
        for (j, r) in self.relators.iter().enumerate() {
            for (i, v) in r.exponent_sums(n).into_iter().enumerate() {
                e[i][j] = v;
            }
        }
        e
    }

    /// Validates the homology-cylinder conditions and solves the marking:
    /// the augmented exponent matrix of the relators restricted to the
    /// (i₋, z) rows must be unimodular; the i₋/z classes are then solved
    /// over ℤ in the i₊-basis, and σ₂ must land in GL(2g,ℤ).
    pub fn validate(&self) -> Result<MarkingData> {
        let g2 = 2 * self.genus;
        let l = self.aux;
        let nrel = g2 + l;
        let e = self.exponent_matrix();
        // M = (i₋,z)-rows × relators, square (2g+l); unimodularity is
        // exactly the invertibility of the augmented (A;B) of Prop. howto.
        let m_block: intmat::IMat = (0..nrel)
            .map(|i| (0..nrel).map(|j| BigInt::from(e[i][j])).collect())
            .collect();
        let det = intmat::det(&m_block);
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular);
        }
        // Solve Mᵀ·X = −(E⁺)ᵀ over ℤ: row i of X = class of generator i in
        // the i₊-basis.
        let mt: intmat::IMat = (0..nrel)
            .map(|j| (0..nrel).map(|i| BigInt::from(e[i][j])).collect())
            .collect();
        let rhs: intmat::IMat = (0..nrel)
            .map(|j| {
                (0..g2)
                    .map(|i| -BigInt::from(e[nrel + i][j]))
                    .collect()
            })
            .collect();
        let x = intmat::solve_unimodular(&mt, &rhs)
            .map_err(|_| Error::MarkingSolveFailed("system not uniquely solvable".into()))?;
        let x64: Vec<Vec<i64>> = intmat::to_i64(&x)
            .ok_or_else(|| Error::MarkingSolveFailed("class overflow".into()))?;
        // σ₂: column i = class of i₋(γᵢ)
        let sigma2: Vec<Vec<i64>> = (0..g2).map(|r| (0..g2).map(|c| x64[c][r]).collect()).collect();
        let sdet = intmat::det_i64(&sigma2).ok_or(Error::NotUnimodular)?;
        if sdet.abs() != 1 {
            return Err(Error::MarkingSolveFailed(
                "sigma2 not in GL(2g,Z)".into(),
            ));
        }
        let mut assignment: Vec<ExpVec> = Vec::with_capacity(self.num_gens());
        for row in x64.iter().take(nrel) {
            assignment.push(row.clone());
        }
        for i in 0..g2 {
            let mut e_i = vec![0i64; g2];
            e_i[i] = 1;
            assignment.push(e_i);
        }
        Ok(MarkingData { sigma2, assignment })
    }

    /// Abelianizes a group-ring element over the presentation's generators
    /// into ℤN₂ via the marking assignment; optionally over variables
    /// extended by extra trailing coordinates (assigned exponent 0).
    pub fn abelianize(
        &self,
        x: &GroupRingElt,
        marking: &MarkingData,
        vars: &Vars,
    ) -> Result<LaurentPoly> {
        let g2 = 2 * self.genus;
        let pad = vars.len() - g2;
        let mut out = LaurentPoly::zero(vars);
        for (w, c) in x.terms() {
            let mut e = vec![0i64; g2];
            for &letter in w.letters() {
                let idx = letter.unsigned_abs() as usize;
                if idx > self.num_gens() {
                    return Err(Error::UnknownGenerator(format!("#{}", idx)));
                }
                let cls = &marking.assignment[idx - 1];
                let s = letter.signum() as i64;
                for (k, v) in cls.iter().enumerate() {
                    e[k] += s * v;
                }
            }
            e.extend(std::iter::repeat(0).take(pad));
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// The bar-involuted, abelianized Fox matrices A (2g×(2g+l)),
    /// B (l×(2g+l)), C (2g×(2g+l)): rows = generators, columns = relators,
    /// entry = bar(ab(∂r_j/∂gen_i)).
    pub fn abc_matrices(
        &self,
        marking: &MarkingData,
        vars: &Vars,
    ) -> Result<(FracMatrix, FracMatrix, FracMatrix)> {
        let g2 = 2 * self.genus;
        let l = self.aux;
        let nrel = g2 + l;
        let grid = |gen_of: &dyn Fn(usize) -> usize, count: usize| -> Result<FracMatrix> {
            let mut data = Vec::with_capacity(count * nrel);
            for i in 1..=count {
                for r in &self.relators {
                    let d = fox_derivative(r, gen_of(i));
                    data.push(RatFunc::from_poly(
                        self.abelianize(&d, marking, vars)?.bar(),
                    ));
                }
            }
            Ok(FracMatrix::new(vars, count, nrel, data))
        };
        let a = grid(&|i| self.iminus_index(i), g2)?;
        let b = grid(&|i| self.z_index(i), l)?;
        let c = grid(&|i| self.iplus_index(i), g2)?;
        Ok((a, b, c))
    }

    /// Stacks A over B into the square (2g+l)×(2g+l) torsion matrix.
    pub fn ab_stacked(&self, marking: &MarkingData, vars: &Vars) -> Result<FracMatrix> {
        let (a, b, _) = self.abc_matrices(marking, vars)?;
        Ok(stack_vertical(&a, &b))
    }

    /// The Magnus matrix r₂(M) = −C·(A;B)⁻¹·[I_{2g}; 0], over the given
    /// variable ring (γ₁..γ_{2g}, possibly extended).
    pub fn magnus(&self, marking: &MarkingData, vars: &Vars) -> Result<FracMatrix> {
        let g2 = 2 * self.genus;
        let l = self.aux;
        let (a, b, c) = self.abc_matrices(marking, vars)?;
        let ab = stack_vertical(&a, &b);
        // right-hand side [I_{2g}; 0]
        let mut rhs = FracMatrix::zero(vars, g2 + l, g2);
        for i in 0..g2 {
            *rhs.at_mut(i, i) = RatFunc::from_poly(LaurentPoly::one(vars));
        }
        let w = ab.solve_right(&rhs).map_err(|_| {
            Error::Internal("(A;B) singular over K_N2 for validated input".into())
        })?;
        Ok(c.mul(&w).neg())
    }

    /// Serializes to the `.hcy` text format.
    pub fn to_hcy(&self) -> String {
        let mut out = String::new();
        out.push_str("hcy v1\n");
        out.push_str(&format!("genus {}\n", self.genus));
        out.push_str(&format!("aux {}\n", self.aux));
        for r in &self.relators {
            out.push_str("rel:");
            for &letter in r.letters() {
                let idx = letter.unsigned_abs() as usize;
                let tok = match self.block(idx) {
                    GenBlock::IMinus(i) => format!("im{}", i),
                    GenBlock::Z(j) => format!("z{}", j),
                    GenBlock::IPlus(i) => format!("ip{}", i),
                };
                if letter > 0 {
                    out.push_str(&format!(" {}", tok));
                } else {
                    out.push_str(&format!(" {}^-1", tok));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `.hcy` text format with line-numbered errors.
    pub fn from_hcy(text: &str) -> Result<Self> {
        let mut genus: Option<usize> = None;
        let mut aux: Option<usize> = None;
        let mut relators: Vec<Word> = Vec::new();
        let mut header_seen = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let n = lineno + 1;
            if !header_seen {
                if line != "hcy v1" {
                    return Err(Error::Parse {
                        line: n,
                        msg: "expected header 'hcy v1'".into(),
                    });
                }
                header_seen = true;
                continue;
            }
            if let Some(rest) = line.strip_prefix("genus") {
                genus = Some(parse_usize(rest.trim(), n, "genus")?);
            } else if let Some(rest) = line.strip_prefix("aux") {
                aux = Some(parse_usize(rest.trim(), n, "aux")?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let g = genus.ok_or(Error::Parse {
                    line: n,
                    msg: "rel: before genus".into(),
                })?;
                let l = aux.ok_or(Error::Parse {
                    line: n,
                    msg: "rel: before aux".into(),
                })?;
                relators.push(parse_rel_word(rest, g, l, n)?);
            } else {
                return Err(Error::Parse {
                    line: n,
                    msg: format!("unrecognized line: {}", line),
                });
            }
        }
        if !header_seen {
            return Err(Error::Parse {
                line: 1,
                msg: "missing header 'hcy v1'".into(),
            });
        }
        let g = genus.ok_or(Error::Parse {
            line: 0,
            msg: "missing genus".into(),
        })?;
        let l = aux.ok_or(Error::Parse {
            line: 0,
            msg: "missing aux".into(),
        })?;
        if relators.len() != 2 * g + l {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "expected {} relators, found {}",
                    2 * g + l,
                    relators.len()
                ),
            });
        }
        AdmissiblePresentation::new(g, l, relators)
    }
}

fn parse_usize(s: &str, line: usize, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {} value: {}", what, s),
    })
}

/// Parses one relator word: whitespace-separated tokens `ip<i>`, `im<i>`,
/// `z<j>`, each optionally suffixed `^<int>`.
fn parse_rel_word(s: &str, genus: usize, aux: usize, line: usize) -> Result<Word> {
    let g2 = 2 * genus;
    let mut letters: Vec<i32> = Vec::new();
    for tok in s.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let exp: i64 = e.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad exponent in token {}", tok),
                })?;
                (b, exp)
            }
            None => (tok, 1),
        };
        let flat: usize = if let Some(num) = base.strip_prefix("im") {
            let i = parse_usize(num, line, "im index")?;
            if i == 0 || i > g2 {
                return Err(Error::Parse {
                    line,
                    msg: format!("im index out of range: {}", tok),
                });
            }
            i
        } else if let Some(num) = base.strip_prefix("ip") {
            let i = parse_usize(num, line, "ip index")?;
            if i == 0 || i > g2 {
                return Err(Error::Parse {
                    line,
                    msg: format!("ip index out of range: {}", tok),
                });
            }
            g2 + aux + i
        } else if let Some(num) = base.strip_prefix('z') {
            let j = parse_usize(num, line, "z index")?;
            if j == 0 || j > aux {
                return Err(Error::Parse {
                    line,
                    msg: format!("z index out of range: {}", tok),
                });
            }
            g2 + j
        } else {
            return Err(Error::Parse {
                line,
                msg: format!("unknown token: {}", tok),
            });
        };
        if exp == 0 {
            continue;
        }
        let letter = flat as i32;
        for _ in 0..exp.unsigned_abs() {
            letters.push(if exp > 0 { letter } else { -letter });
        }
    }
    Ok(Word::from_letters(letters))
}

/// Vertical block stack [A; B].
pub fn stack_vertical(a: &FracMatrix, b: &FracMatrix) -> FracMatrix {
    assert_eq!(a.cols(), b.cols());
    let mut data = Vec::with_capacity((a.rows() + b.rows()) * a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            data.push(a.at(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            data.push(b.at(i, j).clone());
        }
    }
    FracMatrix::new(a.vars(), a.rows() + b.rows(), a.cols(), data)
}

/// The trivial cylinder Σ×I at the given genus: relators i₊(γᵢ)·i₋(γᵢ)⁻¹.
pub fn trivial_cylinder(genus: usize) -> AdmissiblePresentation {
    let g2 = 2 * genus;
    let relators = (1..=g2)
        .map(|i| {
            Word::from_letters([(g2 + i) as i32, -(i as i32)])
        })
        .collect();
    AdmissiblePresentation::new(genus, 0, relators).expect("trivial cylinder is admissible")
}

/// Stacking P₁·P₂ (P₁ on the i₊ side, P₂ on the i₋ side): P₂'s i₊
/// generators are identified with P₁'s i₋ generators as a middle glue
/// block, giving aux = l₂ + 2g + l₁ and relators s⃗ (P₂'s, renamed) then
/// r⃗ (P₁'s, renamed).
pub fn stack(
    p1: &AdmissiblePresentation,
    p2: &AdmissiblePresentation,
) -> Result<AdmissiblePresentation> {
    if p1.genus() != p2.genus() {
        return Err(Error::GenusMismatch(p1.genus(), p2.genus()));
    }
    let g2 = 2 * p1.genus();
    let (l1, l2) = (p1.aux(), p2.aux());
    let l = l1 + l2 + g2;
    // flat index maps into the composite alphabet
    let map_p2 = |idx: usize| -> usize {
        match p2.block(idx) {
            GenBlock::IMinus(i) => i,                 // composite i₋
            GenBlock::Z(j) => g2 + j,                 // first aux block
            GenBlock::IPlus(i) => g2 + l2 + i,        // glue block
        }
    };
    let map_p1 = |idx: usize| -> usize {
        match p1.block(idx) {
            GenBlock::IMinus(i) => g2 + l2 + i,       // glue block
            GenBlock::Z(j) => g2 + l2 + g2 + j,       // second aux block
            GenBlock::IPlus(i) => g2 + l + i,         // composite i₊
        }
    };
    let rename = |w: &Word, f: &dyn Fn(usize) -> usize| -> Word {
        Word::from_letters(w.letters().iter().map(|&x| {
            let m = f(x.unsigned_abs() as usize) as i32;
            if x > 0 {
                m
            } else {
                -m
            }
        }))
    };
    let mut relators = Vec::with_capacity(2 * p1.genus() + l);
    for r in p2.relators() {
        relators.push(rename(r, &map_p2));
    }
    for r in p1.relators() {
        relators.push(rename(r, &map_p1));
    }
    AdmissiblePresentation::new(p1.genus(), l, relators)
}

/// Builds the cylinder M_φ = (Σ×I, id×1, φ×0) of a mapping class:
/// relators i₊(φ(γᵢ))·i₋(γᵢ)⁻¹ with no auxiliary generators. The
/// orientation is fixed by requiring magnus(M_φ) = direct_magnus(φ).
pub fn from_mapping_class(phi: &Endomorphism) -> Result<AdmissiblePresentation> {
    let g2 = phi.rank();
    if g2 == 0 || g2 % 2 != 0 {
        return Err(Error::Not2Connected);
    }
    let ab = phi.abelianized();
    if intmat::det_i64(&ab).map(|d| d.abs()) != Some(1) {
        return Err(Error::Not2Connected);
    }
    let genus = g2 / 2;
    let relators = (1..=g2)
        .map(|i| {
            let img = phi.images()[i - 1].clone();
            // rename image letters into the i₊ block
            let ip = Word::from_letters(img.letters().iter().map(|&x| {
                if x > 0 {
                    x + g2 as i32
                } else {
                    x - g2 as i32
                }
            }));
            ip.mul(&Word::gen(-(i as i32)))
        })
        .collect();
    AdmissiblePresentation::new(genus, 0, relators)
}

/// The Magnus matrix of a mapping class directly from its Fox Jacobian:
/// bar of the abelianized (∂φ(γ_j)/∂γ_i) matrix.
pub fn direct_magnus(phi: &Endomorphism, vars: &Vars) -> Result<FracMatrix> {
    let n = phi.rank();
    let ab = phi.abelianized();
    if intmat::det_i64(&ab).map(|d| d.abs()) != Some(1) {
        return Err(Error::Not2Connected);
    }
    let jac = phi.fox_jacobian();
    let mut grid = Vec::with_capacity(n);
    for row in &jac {
        let mut out_row = Vec::with_capacity(n);
        for entry in row {
            out_row.push(abelianize_free(entry, n, vars)?.bar());
        }
        grid.push(out_row);
    }
    Ok(FracMatrix::from_poly_grid(vars, &grid))
}

/// Abelianization of a free-group ring element with x_i ↦ the i-th variable
/// (trailing variables, if any, receive exponent 0).
pub fn abelianize_free(x: &GroupRingElt, rank: usize, vars: &Vars) -> Result<LaurentPoly> {
    let pad = vars
        .len()
        .checked_sub(rank)
        .ok_or_else(|| Error::Internal("variable ring smaller than rank".into()))?;
    let mut out = LaurentPoly::zero(vars);
    for (w, c) in x.terms() {
        let mut e = w.exponent_sums(rank);
        e.extend(std::iter::repeat(0).take(pad));
        out.add_term(e, c.clone());
    }
    Ok(out)
}

/// The Dehn twist along the boundary ζ, as the automorphism γ ↦ ζ⁻¹γζ.
/// This is the convention that reproduces the explicit r₂(τ_ζ) matrix.
pub fn tau_zeta_automorphism(genus: usize) -> Endomorphism {
    let g2 = 2 * genus;
    let z = boundary_word(genus);
    let zi = z.inverse();
    let images = (1..=g2)
        .map(|i| zi.mul(&Word::gen(i as i32)).mul(&z))
        .collect();
    Endomorphism::new(g2, images).expect("boundary twist is an endomorphism")
}

/// Substitutes γᵢ ↦ (monomial of σ(eᵢ)) entrywise: the ^σ twist of the
/// crossed-homomorphism law. σ acts on exponent vectors as e ↦ σ·e.
pub fn sigma_twist(m: &FracMatrix, sigma: &[Vec<i64>]) -> Result<FracMatrix> {
    let n = m.vars().len();
    let mut t: Vec<Vec<i64>> = vec![vec![0; n]; n];
    let s = sigma.len();
    for i in 0..s {
        for j in 0..s {
            t[i][j] = sigma[i][j];
        }
    }
    for (i, row) in t.iter_mut().enumerate().take(n).skip(s) {
        row[i] = 1;
    }
    m.change_vars(&t, m.vars())
}

/// Basis change r₂^φ = bar(J_φ)⁻¹ · r₂ · ^{σ₂(M)} bar(J_φ) for an
/// automorphism φ of the surface group.
pub fn change_basis(
    p: &AdmissiblePresentation,
    marking: &MarkingData,
    phi: &Endomorphism,
    vars: &Vars,
) -> Result<FracMatrix> {
    let r = p.magnus(marking, vars)?;
    let jbar = direct_magnus(phi, vars)?;
    let twisted = sigma_twist(&jbar, &marking.sigma2)?;
    let rhs = r.mul(&twisted);
    jbar.solve_right(&rhs)
}

/// Parses the `.aut` automorphism file format.
pub fn parse_aut(text: &str) -> Result<Endomorphism> {
    let mut rank: Option<usize> = None;
    let mut images: Vec<Option<Word>> = Vec::new();
    let mut header_seen = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let n = lineno + 1;
        if !header_seen {
            if line != "aut v1" {
                return Err(Error::Parse {
                    line: n,
                    msg: "expected header 'aut v1'".into(),
                });
            }
            header_seen = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("rank") {
            let r = parse_usize(rest.trim(), n, "rank")?;
            rank = Some(r);
            images = vec![None; r];
        } else if let Some(rest) = line.strip_prefix("map") {
            let r = rank.ok_or(Error::Parse {
                line: n,
                msg: "map before rank".into(),
            })?;
            let (lhs, rhs) = rest.split_once(':').ok_or(Error::Parse {
                line: n,
                msg: "map line needs ':'".into(),
            })?;
            let lhs = lhs.trim();
            let idx = lhs
                .strip_prefix('g')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1 && i <= r)
                .ok_or(Error::Parse {
                    line: n,
                    msg: format!("bad map target: {}", lhs),
                })?;
            let mut letters: Vec<i32> = Vec::new();
            for tok in rhs.split_whitespace() {
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<i64>().map_err(|_| Error::Parse {
                            line: n,
                            msg: format!("bad exponent in {}", tok),
                        })?,
                    ),
                    None => (tok, 1),
                };
                let i = base
                    .strip_prefix('g')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= r)
                    .ok_or(Error::Parse {
                        line: n,
                        msg: format!("unknown token: {}", tok),
                    })?;
                for _ in 0..exp.unsigned_abs() {
                    letters.push(if exp >= 0 { i as i32 } else { -(i as i32) });
                }
            }
            images[idx - 1] = Some(Word::from_letters(letters));
        } else {
            return Err(Error::Parse {
                line: n,
                msg: format!("unrecognized line: {}", line),
            });
        }
    }
    let r = rank.ok_or(Error::Parse {
        line: 0,
        msg: "missing rank".into(),
    })?;
    let images: Result<Vec<Word>> = images
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or(Error::Parse {
                line: 0,
                msg: format!("missing map for g{}", i + 1),
            })
        })
        .collect();
    Endomorphism::new(r, images?)
}

/// Serializes an endomorphism to the `.aut` format.
pub fn to_aut(phi: &Endomorphism) -> String {
    let mut out = String::new();
    out.push_str("aut v1\n");
    out.push_str(&format!("rank {}\n", phi.rank()));
    for (i, w) in phi.images().iter().enumerate() {
        out.push_str(&format!("map g{}:", i + 1));
        for &l in w.letters() {
            if l > 0 {
                out.push_str(&format!(" g{}", l));
            } else {
                out.push_str(&format!(" g{}^-1", -l));
            }
        }
        out.push('\n');
    }
    out
}
