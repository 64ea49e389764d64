fn main() {
    let t = std::time::Instant::now();
    let b = fcckit::Budgets::default();
    let rep = fcckit::bch::verify_weight3_containment(5, 5, None, &b).unwrap();
    println!("(5,5): pass={} witnesses={} dims=({},{}) span_dim={} elapsed={:?}",
        rep.pass, rep.witness_count, rep.dim_c12, rep.dim_d, rep.span_dim, t.elapsed());
    let t = std::time::Instant::now();
    let rep = fcckit::bch::verify_coset_structure(5, 5).unwrap();
    println!("coset structure (5,5): pass={} dim={} elapsed={:?}", rep.pass, rep.dim_computed, t.elapsed());
    let t = std::time::Instant::now();
    let rep = fcckit::bch::verify_strictness(5, 3, None, &b).unwrap();
    println!("strictness (5,3): conclusive={} witness={:?} elapsed={:?}", rep.conclusive, rep.witness, t.elapsed());
}
