use perso_norm::grammar::{hex, Grammar, Language, Mode};
use perso_norm::rewrite::{apply_pipeline, canonical_normalize, LayerKind, PositionClass, RuleLayer};
use perso_norm::Error;

fn cps(v: &[u32]) -> Vec<char> {
    v.iter().map(|&c| char::from_u32(c).unwrap()).collect()
}

/// Six spellings of the same Arabic word; row 1 is the target and the mode
/// is the weakest one that fixes each row.
const SPELLINGS: [(&[u32], Option<Mode>); 6] = [
    (&[0x0631, 0x0626, 0x064A, 0x0633], None),
    (&[0x0631, 0x064A, 0x0654, 0x064A, 0x0633], Some(Mode::Nfc)),
    (&[0x0631, 0x0649, 0x0654, 0x064A, 0x0633], Some(Mode::Visual)),
    (&[0x0631, 0x0626, 0x06CC, 0x0633], Some(Mode::Visual)),
    (&[0x0631, 0x06CC, 0x0654, 0x064A, 0x0633], Some(Mode::Reading)),
    (&[0x0631, 0x06CC, 0x0654, 0x06CC, 0x0633], Some(Mode::Reading)),
];

fn rank(mode: Mode) -> u8 {
    match mode {
        Mode::Nfc => 0,
        Mode::Visual => 1,
        Mode::Reading => 2,
    }
}

#[test]
fn six_spellings_resolve_in_the_expected_mode() {
    let g = Grammar::bundled(Language::Ar).unwrap();
    let target = cps(SPELLINGS[0].0);
    for (row, (spelling, needed)) in SPELLINGS.iter().enumerate() {
        let text = cps(spelling);
        for mode in Mode::ALL {
            let fixed = g.normalize(mode, &text) == target;
            let expected = needed.is_none_or(|n| rank(mode) >= rank(n));
            assert_eq!(
                fixed,
                expected,
                "row {} in {mode} mode -> {}",
                row + 1,
                hex(&g.normalize(mode, &text))
            );
        }
    }
}

#[test]
fn urdu_rules_from_table() {
    let g = Grammar::bundled(Language::Ur).unwrap();
    let rules = g.visual_lang().rules();
    let find = |pos: PositionClass| rules.iter().find(|r| r.position == pos).unwrap();
    assert_eq!(find(PositionClass::PositionIndependent).input, cps(&[0x0631, 0x0615]));
    assert_eq!(find(PositionClass::PositionIndependent).output, cps(&[0x0691]));
    assert_eq!(find(PositionClass::NonFinal).output, cps(&[0x06A9]));
    assert_eq!(find(PositionClass::WordFinal).output, cps(&[0x06CC]));
    assert_eq!(find(PositionClass::Isolated).output, cps(&[0x06C1]));

    let v = |t: &[u32]| g.normalize(Mode::Visual, &cps(t));
    assert_eq!(v(&[0x0639, 0x0644, 0x0649]), cps(&[0x0639, 0x0644, 0x06CC]));
    assert_eq!(v(&[0x0647]), cps(&[0x06C1]));
    assert_eq!(v(&[0x0643, 0x0627]), cps(&[0x06A9, 0x0627]));
    assert_eq!(v(&[0x0627, 0x0643]), cps(&[0x0627, 0x0643]));
}

#[test]
fn shared_visual_examples() {
    for language in Language::ALL {
        let g = Grammar::bundled(language).unwrap();
        let v = |t: &[u32]| g.normalize(Mode::Visual, &cps(t));
        assert_eq!(v(&[0x0648, 0x064F]), cps(&[0x06C7]), "{language}");
        assert_eq!(v(&[0xFB52]), cps(&[0x067B]), "{language}");
        assert_eq!(v(&[0xFEFB]), cps(&[0x0644, 0x0627]), "{language}");
        for mode in Mode::ALL {
            assert_eq!(g.normalize_str(mode, "hello"), "hello");
        }
    }
}

#[test]
fn urdu_reading_maps_yeh_to_farsi_yeh() {
    let g = Grammar::bundled(Language::Ur).unwrap();
    let text = cps(&[0x0628, 0x064A, 0x062A]);
    assert_eq!(g.normalize(Mode::Reading, &text), cps(&[0x0628, 0x06CC, 0x062A]));
    assert_eq!(g.normalize(Mode::Visual, &text), text);
}

#[test]
fn yeh_direction_per_language() {
    use Language::*;
    for language in Language::INVENTORIED {
        let g = Grammar::bundled(language).unwrap();
        let dirs: Vec<(Vec<char>, Vec<char>)> = g
            .reading_lang()
            .rules()
            .iter()
            .map(|r| (r.input.clone(), r.output.clone()))
            .collect();
        let forward = dirs.contains(&(cps(&[0x064A]), cps(&[0x06CC])));
        let backward = dirs.contains(&(cps(&[0x06CC]), cps(&[0x064A])));
        match language {
            Ur | Pnb | Ks | Ckb => assert!(forward && !backward, "{language}"),
            Ug | Sd | Ms => assert!(backward && !forward, "{language}"),
            Azb => assert!(!forward && !backward),
            Ar => unreachable!(),
        }
    }
    let sd = Grammar::bundled(Sd).unwrap();
    assert_eq!(sd.reading_lang().rules()[0].layer, LayerKind::ReadingLang);
}

#[test]
fn idempotent_in_every_mode() {
    for language in Language::ALL {
        Grammar::bundled(language)
            .unwrap()
            .check_idempotence(20_000, 7)
            .unwrap();
    }
}

#[test]
fn subsumption_chain() {
    let nfc_only = RuleLayer::new(LayerKind::Nfc);
    let samples = [
        "\u{0631}\u{06CC}\u{0654}\u{064A}\u{0633} \u{0643}\u{0627}\u{0649}",
        "\u{FEFB}\u{0648}\u{064F} \u{0647} \u{0627}\u{0653}",
        "\u{06CC}\u{0654} x \u{064A}\u{0651}\u{0654}",
    ];
    for language in Language::ALL {
        let g = Grammar::bundled(language).unwrap();
        for s in samples {
            let text: Vec<char> = s.chars().collect();
            let nfc = g.normalize(Mode::Nfc, &text);
            let visual = g.normalize(Mode::Visual, &text);
            let reading = g.normalize(Mode::Reading, &text);
            assert_eq!(nfc, canonical_normalize(&text));
            assert_eq!(g.normalize(Mode::Visual, &nfc), visual);
            assert_eq!(apply_pipeline(&visual, &[g.reading_lang(), &nfc_only]), reading);
        }
    }
}

#[test]
fn visual_common_is_shared() {
    let reference: Vec<_> = Grammar::bundled(Language::Ur).unwrap().visual_common().rules().to_vec();
    assert!(reference.len() > 700);
    for language in Language::ALL {
        assert_eq!(
            Grammar::bundled(language).unwrap().visual_common().rules(),
            reference.as_slice()
        );
    }
}

#[test]
fn duplicate_input_rejected() {
    let text = "visual_lang\tword_final\t0649\t06CC\nvisual_lang\tword_final\t0649\t06D2\n";
    match Grammar::from_sources(Language::Ur, "dup.rules", text, None) {
        Err(Error::DuplicateRule { line, position, .. }) => {
            assert_eq!(line, 2);
            assert_eq!(position, "word_final");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn inventory_violation_names_codepoint() {
    // Arabic yeh is not an Urdu letter.
    let text = "visual_lang\tword_final\t0649\t064A\n";
    match Grammar::from_sources(Language::Ur, "inv.rules", text, None) {
        Err(Error::InventoryViolation { codepoint, line, .. }) => {
            assert_eq!(codepoint, 0x064A);
            assert_eq!(line, 1);
        }
        other => panic!("{other:?}"),
    }
    // Marks and whitespace are always allowed.
    let ok = "visual_lang\tposition_independent\t0640\t064E\nvisual_lang\tposition_independent\t06D4\t0020\n";
    Grammar::from_sources(Language::Ur, "ok.rules", ok, None).unwrap();
}

#[test]
fn unknown_language_rejected() {
    assert!(matches!(Grammar::load("fa", None), Err(Error::UnknownLanguage(t)) if t == "fa"));
}

#[test]
fn grammar_dir_overrides() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("ur.rules"), "visual_lang\tisolated\t0647\t06BE\n").unwrap();
    let g = Grammar::load("ur", Some(dir.path())).unwrap();
    assert_eq!(g.normalize(Mode::Visual, &cps(&[0x0647])), cps(&[0x06BE]));
    assert!(g.reading_lang().is_empty());
    // Languages without a file there fall back to bundled data.
    let sd = Grammar::load("sd", Some(dir.path())).unwrap();
    assert_eq!(sd.reading_lang().rules().len(), 1);

    std::fs::write(
        dir.path().join("visual_common.rules"),
        "visual_lang\tisolated\t0647\t06C1\n",
    )
    .unwrap();
    assert!(matches!(
        Grammar::load("ur", Some(dir.path())),
        Err(Error::InvalidRule { .. })
    ));
}
