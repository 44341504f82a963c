//! The explicit triangle-free sets of ER_q for odd q, checked by the
//! independent verifier.
use polarity_graphs::analysis::{triangle_free_bound, verify_certificate};
use polarity_graphs::search::parsons_construction;
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    for q in [3, 5, 7, 9, 11, 13, 17, 19] {
        let g = PolarityGraph::er(q)?;
        let cert = parsons_construction(&g)?;
        let verdict = verify_certificate(&g, &cert)?;
        let (which, formula) = if q % 4 == 1 {
            ("E", q * (q - 1) / 2)
        } else {
            ("S", q * (q + 1) / 2)
        };
        println!(
            "q={q:>2}  {which}_q size={:>3} (expected {formula:>3})  verified={}  upper bound={}",
            cert.size,
            verdict.is_accepted(),
            triangle_free_bound(q).floor
        );
    }
    match parsons_construction(&PolarityGraph::er(8)?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("q=8: {e}"),
    }
    Ok(())
}
