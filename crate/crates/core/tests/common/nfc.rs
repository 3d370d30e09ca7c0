//! Reference NFC built straight from UnicodeData.txt records.

use std::collections::HashMap;

pub struct Ucd {
    pub ccc: HashMap<char, u8>,
    pub decomp: HashMap<char, Vec<char>>,
    pub comp: HashMap<(char, char), char>,
}

pub fn load_ucd() -> Ucd {
    let text = include_str!("../data/UnicodeData-arabic.txt");
    let mut ucd = Ucd {
        ccc: HashMap::new(),
        decomp: HashMap::new(),
        comp: HashMap::new(),
    };
    for line in text.lines() {
        let f: Vec<&str> = line.split(';').collect();
        assert_eq!(f.len(), 15, "{line}");
        let cp = char::from_u32(u32::from_str_radix(f[0], 16).unwrap()).unwrap();
        let ccc: u8 = f[3].parse().unwrap();
        if ccc != 0 {
            ucd.ccc.insert(cp, ccc);
        }
        // Tagged mappings (`<isolated>` etc.) are compatibility only.
        if !f[5].is_empty() && !f[5].starts_with('<') {
            let parts: Vec<char> = f[5]
                .split(' ')
                .map(|h| char::from_u32(u32::from_str_radix(h, 16).unwrap()).unwrap())
                .collect();
            ucd.decomp.insert(cp, parts);
        }
    }
    for (&cp, parts) in &ucd.decomp {
        // No composition exclusions or singletons fall in these blocks.
        assert_eq!(parts.len(), 2);
        ucd.comp.insert((parts[0], parts[1]), cp);
    }
    ucd
}

impl Ucd {
    pub fn class(&self, c: char) -> u8 {
        self.ccc.get(&c).copied().unwrap_or(0)
    }

    fn full_decompose(&self, c: char, out: &mut Vec<char>) {
        match self.decomp.get(&c) {
            Some(parts) => parts.iter().for_each(|&p| self.full_decompose(p, out)),
            None => out.push(c),
        }
    }

    pub fn nfc(&self, input: &[char]) -> Vec<char> {
        let mut d = Vec::new();
        for &c in input {
            self.full_decompose(c, &mut d);
        }
        // Canonical ordering: swap adjacent pairs until none is out of order.
        loop {
            let mut swapped = false;
            for i in 1..d.len() {
                let (a, b) = (self.class(d[i - 1]), self.class(d[i]));
                if a > b && b != 0 {
                    d.swap(i - 1, i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // Canonical composition, checking blockers explicitly.
        let mut i = 1;
        while i < d.len() {
            let starter = (0..i).rev().find(|&j| self.class(d[j]) == 0);
            let mut composed = false;
            if let Some(s) = starter {
                let c = d[i];
                let cc = self.class(c);
                let blocked = (s + 1..i).any(|k| {
                    let kc = self.class(d[k]);
                    kc == 0 || kc >= cc
                });
                if !blocked {
                    if let Some(&p) = self.comp.get(&(d[s], c)) {
                        d[s] = p;
                        d.remove(i);
                        composed = true;
                    }
                }
            }
            if !composed {
                i += 1;
            }
        }
        d
    }
}
