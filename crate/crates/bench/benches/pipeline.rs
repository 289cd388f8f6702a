use criterion::{criterion_group, criterion_main, Criterion};
use intersective::certify::{certify_intersective, CertifyOptions};
use intersective::families::{verify_family, FamilyName, Specialization};
use intersective::poly::parse_int_poly;

fn certify(c: &mut Criterion) {
    let factors: Vec<_> = ["x^2-13", "x^2-17", "x^2-221"].iter().map(|s| parse_int_poly(s, "x").unwrap()).collect();
    let opts = CertifyOptions { screening_bound: 1000, ..CertifyOptions::default() };
    c.bench_function("certify three quadratics", |b| b.iter(|| certify_intersective(&factors, None, &opts).unwrap()));

    let mut slow = c.benchmark_group("families");
    slow.sample_size(10);
    let spec = Specialization::t(1).with("a", 1).with("b", 1).with("c", 1);
    slow.bench_function("psl3_2 at t=1", |b| b.iter(|| verify_family(FamilyName::Psl3_2, &spec).unwrap()));
    slow.finish();
}

criterion_group!(benches, certify);
criterion_main!(benches);
