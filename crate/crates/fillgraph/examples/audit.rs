//! Recompute every operation over catalog and census operands and compare
//! with the predicted signature.

use fillgraph::oracle::{audit_operands, verify_formula_by_recompute, AuditOp};

fn main() {
    let operands = audit_operands(2);
    println!("{} operands", operands.len());
    for op in [AuditOp::Join, AuditOp::Plumbing, AuditOp::ConnectedSum] {
        let r = verify_formula_by_recompute(op, &operands);
        println!("{op:?}: {} trials, {} mismatches", r.trials, r.mismatches());
        for (case, t) in &r.branches {
            println!("  {case:<14} {:>6} trials", t.trials);
        }
    }
}
