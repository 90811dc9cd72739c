use schubert_core::hecke::Hecke;
use schubert_core::mc::Motivic;

fn agree(t: &str) {
    let mc = Motivic::of_type(t).unwrap();
    let h = Hecke::new(mc.ktheory().group_arc());
    for w in mc.ktheory().group().elements() {
        assert_eq!(
            mc.coefficients(w).unwrap(),
            h.mc_coefficients(w).as_slice(),
            "{t} {w:?}"
        );
    }
}

#[test]
fn hecke_coefficients_match_a2() {
    agree("A2");
}

#[test]
fn hecke_coefficients_match_b2() {
    agree("B2");
}

#[test]
fn hecke_coefficients_match_g2() {
    agree("G2");
}

#[test]
fn hecke_word_independence_rank3() {
    for t in ["A3", "B3", "C3"] {
        let h = Hecke::of_type(t).unwrap();
        let g = h.group();
        for w in g.elements() {
            let target = h.t_word(w);
            for word in g.reduced_words(w) {
                assert_eq!(h.t_of_word(&word), target, "{t}");
            }
        }
    }
}
