//! JSON-serializable summaries produced by the command line tool.

use std::time::Instant;

use serde::Serialize;

use crate::dsl::{eval_ring_expr, parse_ring_expr, Evaluated};
use crate::error::{Error, Result};
use crate::gamma::gamma_unit_group;
use crate::ring::{central_idempotents, Budget, FiniteRing};
use crate::units::{jacobson_radical, unit_count, unit_group, unit_set, unit_structure, Structure, UNIT_TABLE_LIMIT};

#[derive(Debug, Clone, Serialize)]
pub struct RadicalBlock {
    pub j_order: usize,
    pub quotient_unit_order: usize,
    pub counting_identity_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub expr: String,
    /// `None` for the infinite `Gamma(k)`.
    pub order: Option<usize>,
    pub characteristic: usize,
    pub unit_order: usize,
    pub structure: Structure,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical: Option<RadicalBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_elements: Option<Vec<String>>,
    pub timing_ms: u128,
}

/// Which optional blocks to compute.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReportRequest {
    pub radical: bool,
    pub idempotents: bool,
    pub elements: bool,
}

pub fn evaluate(expr: &str, budget: Budget) -> Result<Evaluated> {
    let ast = parse_ring_expr(expr).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    eval_ring_expr(&ast, budget)
}

fn ring_structure(ring: &FiniteRing) -> Result<Structure> {
    if unit_count(ring) <= UNIT_TABLE_LIMIT {
        Ok(unit_group(ring)?.structure)
    } else {
        Ok(unit_structure(ring))
    }
}

pub fn ring_report(expr: &str, ring: &FiniteRing, req: ReportRequest, start: Instant) -> Result<Report> {
    let radical = if req.radical {
        let rep = jacobson_radical(ring)?;
        let ok = rep.counting_identity_holds();
        if !ok {
            return Err(Error::UnitGroupCheck("|R^x| != |(R/J)^x| |J|".into()));
        }
        Some(RadicalBlock {
            j_order: rep.j_order(),
            quotient_unit_order: rep.quotient_units_order,
            counting_identity_ok: ok,
        })
    } else {
        None
    };
    Ok(Report {
        expr: expr.to_string(),
        order: Some(ring.order()),
        characteristic: ring.characteristic(),
        unit_order: unit_count(ring),
        structure: ring_structure(ring)?,
        radical,
        idempotent_count: req.idempotents.then(|| central_idempotents(ring).len()),
        unit_elements: req.elements.then(|| unit_set(ring).into_iter().map(|u| ring.label(u)).collect()),
        timing_ms: start.elapsed().as_millis(),
    })
}

pub fn gamma_report(expr: &str, k: u64, req: ReportRequest, budget: Budget, start: Instant) -> Result<Report> {
    if req.radical || req.idempotents {
        return Err(Error::InvalidArgument("Gamma(k) supports only the units command".into()));
    }
    let g = gamma_unit_group(k, budget)?;
    Ok(Report {
        expr: expr.to_string(),
        order: None,
        characteristic: 0,
        unit_order: g.group.order(),
        structure: g.structure,
        radical: None,
        idempotent_count: None,
        unit_elements: req.elements.then(|| g.elements.iter().map(|x| x.to_string()).collect()),
        timing_ms: start.elapsed().as_millis(),
    })
}

/// Parse, evaluate and summarize `expr`.
pub fn report(expr: &str, req: ReportRequest, budget: Budget) -> Result<Report> {
    let start = Instant::now();
    match evaluate(expr, budget)? {
        Evaluated::Ring(r) => ring_report(expr, &r, req, start),
        Evaluated::Gamma(k) => gamma_report(expr, k, req, budget, start),
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ring:           {}", self.expr)?;
        match self.order {
            Some(n) => writeln!(f, "order:          {n}")?,
            None => writeln!(f, "order:          infinite")?,
        }
        writeln!(f, "characteristic: {}", self.characteristic)?;
        writeln!(f, "units:          {}", self.unit_order)?;
        writeln!(f, "structure:      {}", self.structure)?;
        if let Structure::Dihedral { invariants: Some(inv), .. } = &self.structure {
            writeln!(f, "invariants:     {inv}")?;
        }
        if let Some(r) = &self.radical {
            writeln!(f, "|J|:            {}", r.j_order)?;
            writeln!(f, "|(R/J)^x|:      {}", r.quotient_unit_order)?;
            writeln!(f, "counting ok:    {}", r.counting_identity_ok)?;
        }
        if let Some(c) = self.idempotent_count {
            writeln!(f, "central idempotents: {c}")?;
        }
        if let Some(els) = &self.unit_elements {
            writeln!(f, "unit elements:")?;
            for e in els {
                writeln!(f, "  {e}")?;
            }
        }
        write!(f, "time:           {} ms", self.timing_ms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let b = Budget::default();
        let all = ReportRequest { radical: true, idempotents: true, elements: false };
        let r = report("UT(2,GF(3))", ReportRequest::default(), b).unwrap();
        assert_eq!((r.unit_order, r.structure.dihedral_n()), (12, Some(6)));
        let r = report("Gamma(5)", ReportRequest::default(), b).unwrap();
        assert_eq!((r.unit_order, r.order, r.structure.dihedral_n()), (20, None, Some(10)));
        assert_eq!(report("Z(1)", ReportRequest::default(), b).unwrap().unit_order, 1);
        let r = report("GA(GF(2), D(4))", all, b).unwrap().radical.unwrap();
        assert_eq!((r.j_order, r.quotient_unit_order), (8, 1));
        assert_eq!(report("M(2,GF(2))", all, b).unwrap().radical.unwrap().j_order, 1);
        let r = report("Z(12)", all, b).unwrap();
        assert_eq!((r.radical.as_ref().unwrap().j_order, r.radical.unwrap().quotient_unit_order), (2, 2));
        assert_eq!(r.idempotent_count, Some(4));
        assert!(report("Gamma(3)", all, b).is_err());
    }

    #[test]
    fn json_shape() {
        let r = report("Z(8)", ReportRequest { radical: true, ..Default::default() }, Budget::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["structure"]["kind"], "dihedral");
        assert_eq!(v["structure"]["n"], 2);
        assert_eq!(v["radical"]["counting_identity_ok"], true);
        assert!(v.get("idempotent_count").is_none());
        let g = serde_json::to_value(report("Gamma(1)", ReportRequest::default(), Budget::default()).unwrap()).unwrap();
        assert!(g["order"].is_null());
        assert_eq!(g["characteristic"], 0);
    }
}
