use super::{ExpansionResult, Expansions};
use crate::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::ratfunc::PolyT;
use crate::tseries::TruncatedSeries;

impl<D: CoefficientDomain> Expansions<D> {
    /// `G_{q^k-1}(t) = Σ_{0≤i<k} β'_i t^{q^k-q^i}` modulo `t^prec`.
    pub fn goss_special(&self, k: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        if k < 1 {
            return Err(Error::OutOfRange("Goss polynomial needs k >= 1".into()));
        }
        let q = self.q();
        let beta = self.module.generic_betas(k as usize)?;
        let qk = q.pow(k);
        let terms = (0..k).map(|i| (qk - q.pow(i), beta[i as usize].clone())).collect();
        TruncatedSeries::new(self.domain(), terms, prec)
    }

    /// `t_a^{q^k - q^i}` modulo `t^prec`, as the `q^i`-th power of
    /// `t_a^{q^{k-i}-1}`.
    fn t_a_power(&self, a: &PolyT, k: u32, i: u32, prec: u64) -> Result<TruncatedSeries<D>> {
        let q = self.q();
        let d = a.degree().expect("monic") as u32;
        let n = self.module.qsd(d);
        let e = q.pow(k - i) - 1;
        let inner_prec = prec.div_ceil(q.pow(i));
        if e * n >= inner_prec {
            return Ok(TruncatedSeries::zero(self.domain(), prec));
        }
        let ta = self.module.t_a_series(a, inner_prec - (e - 1) * n)?;
        let pw = ta.pow(e)?;
        Ok(self.frob_to(&pw, i, prec))
    }

    /// `E_{q^k-1} = E'_{q^k-1} - Σ_{a monic} G_{q^k-1}(t_a)`, summing over the
    /// degrees `d` with `(q^k - q^{k-1}) q^{sd} < prec`.
    pub fn eisenstein_a_expansion(&self, k: u32, prec: u64) -> Result<ExpansionResult<D>> {
        if k < 1 {
            return Err(Error::OutOfRange("E_{q^k-1} needs k >= 1".into()));
        }
        let dom = self.domain();
        let q = self.q();
        let beta = self.module.generic_betas(k as usize)?;
        let lead = q.pow(k) - q.pow(k - 1);
        let mut parts = vec![self.constant(self.module.eisenstein_prime(k as usize)?, prec)];
        let mut d = 0;
        while lead * self.module.qsd(d) < prec {
            let per_a = self.map_monic(d, |a| {
                let mut acc = TruncatedSeries::zero(dom, prec);
                for i in 0..k {
                    let p = self.t_a_power(a, k, i, prec)?.scale(&beta[i as usize]);
                    acc = acc.add(&p)?;
                }
                Ok(acc.neg())
            })?;
            parts.extend(per_a);
            d += 1;
        }
        Ok(ExpansionResult {
            series: TruncatedSeries::sum(dom, prec, &parts)?,
            claimed_weight: q.pow(k) as i64 - 1,
            label: format!("E_{}", q.pow(k) - 1),
        })
    }

    /// `Σ_{0≤i≤k} E'_{q^i-1} t^{q^k-q^i}` with `E'_0 = -1`.
    pub fn eisenstein_closed(&self, k: u32, prec: u64) -> Result<ExpansionResult<D>> {
        if k < 1 {
            return Err(Error::OutOfRange("E_{q^k-1} needs k >= 1".into()));
        }
        let q = self.q();
        let qk = q.pow(k);
        let mut terms = Vec::new();
        for i in 0..=k {
            terms.push((qk - q.pow(i), self.module.eisenstein_prime(i as usize)?));
        }
        Ok(ExpansionResult {
            series: TruncatedSeries::new(self.domain(), terms, prec)?,
            claimed_weight: qk as i64 - 1,
            label: format!("E_{}", qk - 1),
        })
    }
}
