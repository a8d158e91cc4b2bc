use super::BraidError;
use crate::exactfield::RootOfUnity;
use crate::exactla::Matrix;
use crate::permgroup::{conjugacy_class, NormalForm, Permutation, UnmixedClass};
use crate::reps::InducedRep;

/// `M(C, ρ)` for the unmixed class `C` of `π = A_1 ⋯ A_n` and an irrep `ρ` of
/// its centralizer. Elements `t` of `C` are paired with a transporter `g`,
/// `g ▷ π = t`; the module never needs the full class.
#[derive(Clone, Debug)]
pub struct YDModule {
    class: UnmixedClass,
    rep: InducedRep,
    pi: Permutation,
}

impl YDModule {
    pub fn new(rep: InducedRep) -> Self {
        let class = *rep.class();
        let pi = class.basepoint();
        YDModule { class, rep, pi }
    }

    pub fn class(&self) -> &UnmixedClass {
        &self.class
    }

    pub fn rep(&self) -> &InducedRep {
        &self.rep
    }

    pub fn basepoint(&self) -> &Permutation {
        &self.pi
    }

    pub fn transporter(&self, t: &Permutation) -> Result<Permutation, BraidError> {
        Ok(self.class.transporter(t)?)
    }

    /// `γ = g_j⁻¹ t_i g_j`, which lies in the centralizer exactly when `t_i`
    /// commutes with `t_j = g_j ▷ π`.
    pub fn gamma(&self, t_i: &Permutation, g_j: &Permutation) -> Result<NormalForm, BraidError> {
        let gamma = g_j.inverse().compose(t_i).compose(g_j);
        self.class
            .normal_form(&gamma)
            .map_err(|_| BraidError::NotCommuting(t_i.to_string(), g_j.conjugate(&self.pi).to_string()))
    }

    pub fn rho(&self, g: &NormalForm) -> Matrix {
        self.rep.evaluate(g)
    }

    /// `ρ(g)` for one-dimensional `ρ`.
    pub fn rho_scalar(&self, g: &NormalForm) -> Option<RootOfUnity> {
        self.rep.scalar(g)
    }

    /// Order of the centralizer element, which bounds the order of `ρ(g)`.
    pub fn element_order(&self, g: &NormalForm) -> u32 {
        self.class.assemble(g).order() as u32
    }

    /// Class elements other than `π` that commute with `π`, sorted.
    pub fn commuting_elements(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self
            .class
            .commuting_class_normal_forms()
            .iter()
            .map(|nf| self.class.assemble(nf))
            .collect();
        out.sort();
        out
    }

    /// The full class, sorted. Refuses when the class is larger than `cap`.
    pub fn class_elements(&self, cap: u128) -> Result<Vec<Permutation>, BraidError> {
        let size = self.class.class_size();
        if size > cap {
            return Err(BraidError::CapExceeded {
                what: "class enumeration",
                needed: size,
                cap,
            });
        }
        Ok(conjugacy_class(&self.class.cycle_type(), self.class.degree())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::RepSpec;

    fn module(k: u32, n: u32, spec: &str) -> YDModule {
        let class = UnmixedClass::new(k, n).unwrap();
        let rep = spec
            .parse::<RepSpec>()
            .unwrap()
            .resolve(k, n)
            .unwrap()
            .build(&class)
            .unwrap();
        YDModule::new(rep)
    }

    #[test]
    fn gamma_for_involution_transporter() {
        let yd = module(2, 3, "chi=k:3");
        let alpha = Permutation::parse_cycles("(12)(35)(46)", 6).unwrap();
        let g = Permutation::parse_cycles("(45)", 6).unwrap();
        assert_eq!(g.conjugate(yd.basepoint()), alpha);
        let nf = yd.gamma(yd.basepoint(), &g).unwrap();
        // α = A_1 B_2
        assert_eq!(nf.d, vec![1, 0, 0]);
        assert_eq!(nf.b, Permutation::parse_cycles("(23)", 3).unwrap());
        // g_1 = id gives γ_{t,1} = t
        let id = Permutation::identity(6);
        assert_eq!(yd.class().assemble(&yd.gamma(&alpha, &id).unwrap()), alpha);
    }

    #[test]
    fn gamma_of_basepoint_with_itself() {
        let yd = module(4, 2, "chi=(1,1)");
        let id = Permutation::identity(8);
        assert_eq!(yd.gamma(yd.basepoint(), &id).unwrap(), yd.class().nf_basepoint());
    }

    #[test]
    fn gamma_defined_iff_commuting() {
        let yd = module(2, 3, "chi=k:3");
        let class = yd.class_elements(100).unwrap();
        for t in &class {
            for u in &class {
                let g = yd.transporter(u).unwrap();
                let ok = yd.gamma(t, &g).is_ok();
                assert_eq!(ok, t.commutes_with(u), "{t} {u}");
            }
        }
    }

    #[test]
    fn commuting_elements_sizes() {
        // (2^2): the other two double transpositions
        assert_eq!(module(2, 2, "chi=k:1").commuting_elements().len(), 2);
        // k-cycle: the generators of <π> other than π
        assert_eq!(module(6, 1, "chi=(3)").commuting_elements().len(), 1);
        assert_eq!(module(10, 1, "chi=(5)").commuting_elements().len(), 3);
        assert_eq!(module(2, 3, "chi=k:3").class_elements(100).unwrap().len(), 15);
        assert!(module(2, 5, "chi=k:5").class_elements(100).is_err());
    }
}
