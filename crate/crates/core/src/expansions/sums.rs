use super::Expansions;
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::tseries::TruncatedSeries;

impl<D: CoefficientDomain> Expansions<D> {
    /// `Θ(j,d) = Σ_{a monic, deg a = d} t_a^{q^j-1}`, computed from the unit
    /// part `w` of `t_a = c t^{q^{sd}} w` as `c^{q^j-1} t^{q^{sd}(q^j-1)} w^{q^j} w^{-1}`.
    pub fn theta(&self, j: u32, d: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        if j < 1 || d < 1 {
            return Err(Error::OutOfRange("Θ(j,d) needs j, d >= 1".into()));
        }
        let dom = self.domain();
        let n = self.module.qsd(d);
        let qj = self.q().pow(j);
        let shift = n * (qj - 1);
        if shift >= prec {
            return Ok(TruncatedSeries::zero(dom, prec));
        }
        let rest = prec - shift;
        let parts = self.map_monic(d, |a| {
            let ta = self.module.t_a_series(a, n + rest)?;
            let c = ta.coefficient(n)?;
            let cinv = dom.invert_unit(&c)?;
            let w = ta.shift_down(n)?.scale(&cinv);
            let unit = self.frob_to(&w, j, rest).mul(&w.invert()?)?;
            let lead = dom.mul(&dom.frobenius_pow(&c, j), &cinv);
            Ok(unit.shift(shift).scale(&lead))
        })?;
        TruncatedSeries::sum(dom, prec, &parts)
    }

    /// `Σ(j,d) = Σ_{a monic, deg a = d} S_a^{1-q^j}`.
    pub fn sigma(&self, j: u32, d: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        if j < 1 || d < 1 {
            return Err(Error::OutOfRange("Σ(j,d) needs j, d >= 1".into()));
        }
        let dom = self.domain();
        let parts = self.map_monic(d, |a| {
            let sa = self.module.s_a(a)?.to_series(dom, prec)?;
            sa.mul(&self.frob_to(&sa, j, prec).invert()?)
        })?;
        TruncatedSeries::sum(dom, prec, &parts)
    }

    /// `E_{q^i-1}(L) = -t^{q^i-1} - Σ_{d≥1} Δ'_{(d)}^{1-q^i} t^{q^{sd}(q^i-1)} Σ(i,d)`,
    /// summing the degrees with `q^{sd}(q^i-1) < prec`. `i = 0` gives `-1`.
    pub fn tate_eisenstein(&self, i: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        let dom = self.domain();
        if i == 0 {
            return Ok(self.constant(dom.neg(&dom.one()), prec));
        }
        let qi = self.q().pow(i);
        let mut parts = vec![TruncatedSeries::monomial(dom, dom.neg(&dom.one()), qi - 1, prec)];
        let mut d = 1;
        loop {
            let shift = self.module.qsd(d) * (qi - 1);
            if shift >= prec {
                break;
            }
            let sig = self.sigma(i, d, prec - shift)?;
            let c = dom.neg(&dom.frobenius_pow(&dom.invert_unit(&self.module.delta_d(d))?, i));
            let c = dom.mul(&c, &self.module.delta_d(d));
            parts.push(sig.shift(shift).scale(&c));
            d += 1;
        }
        TruncatedSeries::sum(dom, prec, &parts)
    }
}

#[cfg(test)]
mod tests {
    use crate::coeffring::RingSpec;
    use crate::domain::CoefficientDomain;
    use crate::expansions::{homogeneity_violations, Expansions};
    use crate::tseries::TruncatedSeries;

    #[test]
    fn theta_matches_sigma_relation() {
        // Θ(j,d) = Δ'_{(d)}^{1-q^j} t^{q^{sd}(q^j-1)} Σ(j,d)
        for (q, r) in [(2, 3), (3, 3)] {
            let rg = RingSpec::for_q(q, r).unwrap();
            let ex = Expansions::new(&rg);
            for j in 1..=2 {
                let n = ex.module().qsd(1) * ((q as u64).pow(j) - 1);
                let prec = n + 40;
                let th = ex.theta(j, 1, prec).unwrap();
                let sig = ex.sigma(j, 1, prec - n).unwrap();
                let d1 = ex.module().delta_d(1);
                let c = rg.mul(&d1, &rg.frobenius(&rg.invert_unit(&d1).unwrap(), j));
                assert_eq!(th, sig.shift(n).scale(&c), "q={q} j={j}");
                assert!(homogeneity_violations(&rg, &th, (q as i64).pow(j) - 1).is_empty());
                assert!(homogeneity_violations(&rg, &sig, 0).is_empty());
            }
        }
    }

    #[test]
    fn sigma_cross_term_at_q3() {
        // For a = T + c, -S_a (S_a^3 - 1) contributes -(T+c)^4 Δ'^{-4} at t^32,
        // and Σ_{c ∈ F_3} (T+c)^4 = Σ c^4 = -1.
        for r in [3, 4] {
            let rg = RingSpec::for_q(3, r).unwrap();
            let ex = Expansions::new(&rg);
            let s = 3u64.pow(r - 1);
            let first = 4 * (s - 1);
            let sig = ex.sigma(1, 1, 2 * (3 * s - s)).unwrap();
            assert_eq!(sig.terms()[0], (first, rg.delta_pow(-4)), "r={r}");
        }
    }

    #[test]
    fn sigma_cross_term_at_q2() {
        // S_a = 1 + g'_1/Δ' X^2 + (T+c)/Δ' X^3; the X^3 · X^4 cross term summed
        // over c ∈ F_2 gives (2T + 1) g'_1^2 Δ'^{-3} = g'_1^2 Δ'^{-3} at t^7.
        let rg = RingSpec::for_q(2, 3).unwrap();
        let ex = Expansions::new(&rg);
        let sig = ex.sigma(1, 1, 8).unwrap();
        let g1 = rg.g(1);
        let want = [(3, rg.delta_pow(-1)), (6, rg.delta_pow(-2)), (7, rg.mul(&rg.mul(&g1, &g1), &rg.delta_pow(-3)))];
        assert_eq!(sig.terms(), &want[..]);
    }

    #[test]
    fn tate_value_leading_term() {
        let rg = RingSpec::for_q(3, 3).unwrap();
        let ex = Expansions::new(&rg);
        let e = ex.tate_eisenstein(1, 40).unwrap();
        assert_eq!(e.terms()[0], (2, rg.neg(&rg.one())));
        let e0 = ex.tate_eisenstein(0, 5).unwrap();
        assert_eq!(e0, TruncatedSeries::monomial(&rg, rg.neg(&rg.one()), 0, 5));
    }
}
