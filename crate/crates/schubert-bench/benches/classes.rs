use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use schubert_core::cohclass::Csm;
use schubert_core::hecke::Hecke;
use schubert_core::hirzebruch::{Hirzebruch, Normalization};
use schubert_core::kclass::{Basis, KTheory};
use schubert_core::lie::WeylElement;
use schubert_core::mc::Motivic;

fn motivic(c: &mut Criterion) {
    for t in ["A3", "B3", "G2"] {
        c.bench_function(&format!("mc all cells {t}"), |b| {
            b.iter_batched(
                || Motivic::of_type(t).unwrap(),
                |mc| mc.precompute().unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    let mc = Motivic::of_type("A3").unwrap();
    mc.precompute().unwrap();
    let k = mc.ktheory();
    let w0 = k.group().longest();
    c.bench_function("expand MC(X(w0)) A3", |b| {
        b.iter(|| k.expand(mc.mc(w0), Basis::Structure).unwrap())
    });
}

fn hecke(c: &mut Criterion) {
    let h = Hecke::of_type("G2").unwrap();
    let word: Vec<u8> = (0..6).map(|k| (k % 2) as u8).collect();
    c.bench_function("hecke T_w0 G2", |b| b.iter(|| h.t_of_word(&word)));
}

fn segre(c: &mut Criterion) {
    let csm = Csm::of_type("G2").unwrap();
    c.bench_function("segre structure constants G2", |b| {
        b.iter(|| {
            csm.sm_structure_constants(WeylElement::ID, WeylElement::ID)
                .unwrap()
        })
    });
}

fn hirzebruch(c: &mut Criterion) {
    let k = Arc::new(KTheory::of_type("A2").unwrap());
    let w0 = k.group().longest();
    c.bench_function("hirzebruch A2 cap 6", |b| {
        b.iter_batched(
            || Hirzebruch::new(k.clone(), 6),
            |h| h.hirzebruch_class(w0, Normalization::Normalized).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = motivic, hecke, segre, hirzebruch
}
criterion_main!(benches);
