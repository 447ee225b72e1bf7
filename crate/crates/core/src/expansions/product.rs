use super::Expansions;
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::ratfunc::PolyT;
use crate::tseries::TruncatedSeries;

impl<D: CoefficientDomain> Expansions<D> {
    /// `Π(d) = Π_{a monic, deg a = d} S_a(t)` by direct multiplication.
    pub fn pi(&self, d: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        if d < 1 {
            return Err(Error::OutOfRange("Π(d) needs d >= 1".into()));
        }
        let dom = self.domain();
        let factors = self.map_monic(d, |a| self.module.s_a(a)?.to_series(dom, prec))?;
        let mut acc = TruncatedSeries::one(dom, prec);
        for f in &factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// `Π(1) = S_T^q - S_T W^{q-1}` with `W = Δ'^{-1} t^{q^s-1}`.
    pub fn pi1_closed(&self, prec: u64) -> Result<TruncatedSeries<D>> {
        let dom = self.domain();
        let q = self.q();
        let st = self.module.s_a(&PolyT::t())?.to_series(dom, prec)?;
        let w_pow = TruncatedSeries::monomial(dom, dom.delta_pow(1 - q as i64), (q - 1) * (q.pow(self.s()) - 1), prec);
        self.frob_to(&st, 1, prec).sub(&st.mul(&w_pow)?)
    }

    /// Degrees `d ≥ 1` with `(q-1)(q^{sd}-1) < prec`; `Π(d)` for larger `d`
    /// is `1` modulo `t^prec`.
    pub fn pi_degrees(&self, prec: u64) -> Vec<u32> {
        let q = self.q();
        (1..).take_while(|&d| (q - 1) * (self.module.qsd(d) - 1) < prec).collect()
    }

    /// `H = Π_{d≥1} Π(d)^{q^r-1}`, the normalized `h = h'^q t H`.
    pub fn h_normalized(&self, prec: u64) -> Result<TruncatedSeries<D>> {
        let dom = self.domain();
        let r = dom.rank();
        let mut acc = TruncatedSeries::one(dom, prec);
        for d in self.pi_degrees(prec) {
            let p = self.pi(d, prec)?;
            let factor = self.frob_to(&p, r, prec).mul(&p.invert()?)?;
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// `Π(1)^{-1}`.
    pub fn h_closed(&self, prec: u64) -> Result<TruncatedSeries<D>> {
        self.pi(1, prec)?.invert()
    }

    /// `-Δ'^q t^{q-1} H^{q-1}`, the product formula for `g_r = Δ`.
    pub fn delta_product(&self, prec: u64) -> Result<TruncatedSeries<D>> {
        let dom = self.domain();
        let q = self.q();
        if q > prec {
            return Ok(TruncatedSeries::zero(dom, prec));
        }
        let h = self.h_normalized(prec - (q - 1))?;
        let c = dom.neg(&dom.delta_pow(q as i64));
        Ok(h.pow(q - 1)?.shift(q - 1).scale(&c).truncate(prec))
    }
}

#[cfg(test)]
mod tests {
    use crate::coeffring::RingSpec;
    use crate::domain::CoefficientDomain;
    use crate::expansions::{homogeneity_violations, Expansions};
    use crate::tseries::Order;

    #[test]
    fn pi1_routes_agree() {
        for (q, r) in [(2, 3), (3, 3), (2, 4), (4, 3)] {
            let rg = RingSpec::for_q(q, r).unwrap();
            let ex = Expansions::new(&rg);
            let prec = 120;
            let a = ex.pi(1, prec).unwrap();
            let b = ex.pi1_closed(prec).unwrap();
            assert_eq!(a, b, "q={q} r={r}");
            let s = r - 1;
            let lead = (q as u64 - 1) * ((q as u64).pow(s) - 1);
            let one = crate::tseries::TruncatedSeries::one(&rg, prec);
            let diff = a.sub(&one).unwrap();
            assert_eq!(diff.order(), Order::Finite(lead));
            assert_eq!(diff.terms()[0].1, rg.neg(&rg.delta_pow(1 - q as i64)));
            assert!(homogeneity_violations(&rg, &a, 0).is_empty());
        }
    }

    #[test]
    fn h_head() {
        let rg = RingSpec::for_q(3, 3).unwrap();
        let ex = Expansions::new(&rg);
        let h = ex.h_normalized(40).unwrap();
        assert_eq!(h.terms()[0], (0, rg.one()));
        assert_eq!(h.terms()[1], (16, rg.delta_pow(-2)));
    }
}
