#[test]
fn micro() {
    use homcyl_core::cyclo::*;
    use homcyl_core::interval::*;
    let t0 = std::time::Instant::now();
    let p = pi(136);
    println!("pi(136) in {:?} width ~2^-136", t0.elapsed());
    let t0 = std::time::Instant::now();
    let c = cos_two_pi_ratio(3, 8, 128);
    println!("cos in {:?} sign {:?}", t0.elapsed(), c.sign());
    let f = CycloField::new(8);
    let a = f.add(&f.root_power(1), &f.add(&f.root_power(-1), &f.from_integer(-1)));
    assert!(f.is_real(&a));
    let t0 = std::time::Instant::now();
    let s = f.embedding_sign(&a, 1, 128);
    println!("embedding_sign in {:?} = {}", t0.elapsed(), s);
}
