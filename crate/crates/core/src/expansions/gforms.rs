use super::{ExpansionResult, Expansions};
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::ratfunc::PolyT;
use crate::tseries::TruncatedSeries;

impl<D: CoefficientDomain> Expansions<D> {
    fn check_k(&self, k: u32) -> Result<()> {
        let r = self.domain().rank();
        if (1..=r).contains(&k) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("g_k needs 1 <= k <= r = {r}, got k = {k}")))
        }
    }

    /// `g_1, …, g_k` from the recursion
    /// `g_k = Σ_{1≤i≤k} E_{q^i-1}(L) g_{k-i}^{q^i} - Σ_{0≤i≤k} g'_i E_{q^{k-i}-1}(L)^{q^i}`
    /// with `g_0 = T` and `E_0(L) = -1`.
    pub fn g_series_all(&self, k: u32, prec: u64) -> Result<Vec<TruncatedSeries<D>>> {
        self.check_k(k)?;
        let dom = self.domain();
        let mut e = vec![self.tate_eisenstein(0, prec)?];
        for i in 1..=k {
            e.push(self.tate_eisenstein(i, prec)?);
        }
        let mut g = vec![self.constant(dom.from_poly(&PolyT::t()), prec)];
        for kk in 1..=k as usize {
            let mut acc = TruncatedSeries::zero(dom, prec);
            for i in 1..=kk {
                let term = e[i].mul(&self.frob_to(&g[kk - i], i as u32, prec))?;
                acc = acc.add(&term)?;
            }
            for i in 0..=kk {
                let gi = dom.generator(i as u32);
                if dom.is_zero(&gi) {
                    continue;
                }
                let term = self.frob_to(&e[kk - i], i as u32, prec).scale(&gi);
                acc = acc.sub(&term)?;
            }
            g.push(acc.truncate(prec));
        }
        Ok(g.split_off(1))
    }

    pub fn g_series(&self, k: u32, prec: u64) -> Result<ExpansionResult<D>> {
        let series = self.g_series_all(k, prec)?.pop().expect("k >= 1");
        Ok(ExpansionResult { series, claimed_weight: self.q().pow(k) as i64 - 1, label: format!("g_{k}") })
    }

    /// `g'_k + Σ_{1≤i≤k-1} (g'_i t^{q^k-q^i} - g'_i^q t^{q^k-q^{i+1}+q-1}) - [1] t^{q^k-1}`,
    /// with `g'_r = 0`.
    pub fn g_closed(&self, k: u32, prec: u64) -> Result<ExpansionResult<D>> {
        self.check_k(k)?;
        let dom = self.domain();
        let q = self.q();
        let qk = q.pow(k);
        let mut terms = vec![(0, dom.generator(k))];
        for i in 1..k {
            let gi = dom.generator(i);
            terms.push((qk - q.pow(i), gi.clone()));
            terms.push((qk - q.pow(i + 1) + q - 1, dom.neg(&dom.frobenius_pow(&gi, 1))));
        }
        let b1 = PolyT::bracket(1, dom.base_field())?;
        terms.push((qk - 1, dom.neg(&dom.from_poly(&b1))));
        Ok(ExpansionResult {
            series: TruncatedSeries::new(dom, terms, prec)?,
            claimed_weight: qk as i64 - 1,
            label: format!("g_{k}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::coeffring::RingSpec;
    use crate::domain::CoefficientDomain;
    use crate::expansions::Expansions;
    use crate::ratfunc::PolyT;

    #[test]
    fn closed_form_examples() {
        let rg = RingSpec::for_q(3, 3).unwrap();
        let f = rg.field().clone();
        let ex = Expansions::new(&rg);
        let g2 = ex.g_closed(2, 54).unwrap().series;
        let b1 = rg.from_poly(&PolyT::bracket(1, &f).unwrap());
        let g1 = rg.g(1);
        assert_eq!(
            g2.terms(),
            &[(0, rg.delta()), (2, rg.neg(&rg.frobenius(&g1, 1))), (6, g1.clone()), (8, rg.neg(&b1)),]
        );
        let g3 = ex.g_closed(3, 54).unwrap().series;
        assert_eq!(g3.support(), vec![2, 18, 20, 24, 26]);
        assert_eq!(g3.coefficient(2).unwrap(), rg.neg(&rg.delta_pow(3)));
        assert!(ex.g_closed(4, 54).is_err());
        assert!(ex.g_closed(0, 54).is_err());
    }

    #[test]
    fn first_coefficient_form_head() {
        let rg = RingSpec::for_q(3, 3).unwrap();
        let f = rg.field().clone();
        let ex = Expansions::new(&rg);
        let g1 = ex.g_series(1, 30).unwrap().series;
        let b1 = rg.from_poly(&PolyT::bracket(1, &f).unwrap());
        assert_eq!(g1.terms(), &[(0, rg.g(1)), (2, rg.neg(&b1))]);
    }
}
