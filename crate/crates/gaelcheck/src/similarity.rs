//! Phonetic similarity between an English word and an Irish word form.
//!
//! Both words are mapped onto a shared phoneme skeleton by small rule
//! tables: Irish bh/mh become a v-sound, ch a k-sound, th/sh an h, s
//! before a slender vowel an sh-sound, fada vowels fold into their plain
//! letters; English gets simple letter-to-sound treatment (soft c, ck,
//! ph, silent final e, -tion, collapsed doubles). Vowel groups collapse
//! to a single placeholder so that consonant structure dominates. The
//! score is one minus the normalized edit distance between skeletons and
//! is symmetric in skeleton space.

use crate::orthography::{self, VowelClass};

/// Vowel placeholder in skeletons.
const V: char = 'a';

fn is_eng_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

/// Map an Irish word form to its phoneme skeleton.
pub fn irish_skeleton(word: &str) -> String {
    let folded = orthography::fold(word);
    let chars: Vec<char> = folded.chars().filter(|c| c.is_alphabetic()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        if orthography::is_vowel(c) {
            out.push(V);
            i += 1;
            continue;
        }
        if next == Some('h') {
            let mapped = match c {
                'f' => None, // fh is silent
                'b' | 'm' => Some('v'),
                'p' => Some('f'),
                'c' => Some('k'),
                't' | 's' => Some('h'),
                'g' | 'd' => Some('g'),
                _ => Some(c),
            };
            if let Some(m) = mapped {
                out.push(m);
            }
            if matches!(c, 'f' | 'b' | 'm' | 'p' | 'c' | 't' | 's' | 'g' | 'd') {
                i += 2;
                continue;
            }
            i += 1;
            continue;
        }
        let mapped = match c {
            'c' => 'k',
            's' => {
                // Slender s sounds like sh.
                if next.map(orthography::classify_vowel) == Some(Some(VowelClass::Slender)) {
                    'S'
                } else {
                    's'
                }
            }
            other => other,
        };
        out.push(mapped);
        i += 1;
    }
    collapse(out)
}

/// Map an English word to its phoneme skeleton.
pub fn english_skeleton(word: &str) -> String {
    let lowered: String = word
        .to_lowercase()
        .chars()
        .filter(|c| c.is_alphabetic())
        .collect();
    let mut chars: Vec<char> = lowered.chars().collect();
    // Silent final e (kept when it is the only vowel), also before a
    // plural s: nacelle → nacell, cassettes → cassetts.
    if chars.len() > 3 && chars.ends_with(&['e', 's']) {
        chars.remove(chars.len() - 2);
    } else if chars.len() > 2
        && chars.last() == Some(&'e')
        && chars[..chars.len() - 1].iter().any(|c| is_eng_vowel(*c))
    {
        chars.pop();
    }

    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let rest = &chars[i..];
        // Multi-letter rules, longest first.
        if rest.starts_with(&['t', 'i', 'o', 'n']) {
            out.extend(['S', V, 'n']);
            i += 4;
            continue;
        }
        if i == 0 && rest.starts_with(&['k', 'n']) {
            out.push('n');
            i += 2;
            continue;
        }
        if i == 0 && rest.starts_with(&['w', 'r']) {
            out.push('r');
            i += 2;
            continue;
        }
        if rest.starts_with(&['c', 'k']) || rest.starts_with(&['c', 'h']) {
            out.push('k');
            i += 2;
            continue;
        }
        if rest.starts_with(&['p', 'h']) {
            out.push('f');
            i += 2;
            continue;
        }
        if rest.starts_with(&['s', 'h']) {
            out.push('S');
            i += 2;
            continue;
        }
        if rest.starts_with(&['t', 'h']) {
            out.push('h');
            i += 2;
            continue;
        }
        if rest.starts_with(&['w', 'h']) {
            out.push('w');
            i += 2;
            continue;
        }
        if rest.starts_with(&['q', 'u']) {
            out.extend(['k', 'w']);
            i += 2;
            continue;
        }
        let c = chars[i];
        if is_eng_vowel(c) {
            out.push(V);
            i += 1;
            continue;
        }
        let mapped = match c {
            'c' => {
                if matches!(chars.get(i + 1), Some('e') | Some('i') | Some('y')) {
                    's'
                } else {
                    'k'
                }
            }
            'x' => {
                out.extend(['k', 's']);
                i += 1;
                continue;
            }
            other => other,
        };
        out.push(mapped);
        i += 1;
    }
    collapse(out)
}

/// Collapse runs of identical skeleton characters.
fn collapse(chars: Vec<char>) -> String {
    let mut out = String::new();
    for c in chars {
        if out.chars().last() != Some(c) {
            out.push(c);
        }
    }
    out
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            cur[j + 1] = (prev[j] + cost).min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Similarity score in [0, 1] between an English word and an Irish word
/// form: 1 − normalized edit distance between phoneme skeletons.
pub fn phonetic_similarity(english: &str, irish: &str) -> f64 {
    let e = english_skeleton(english);
    let g = irish_skeleton(irish);
    if e.is_empty() && g.is_empty() {
        return 1.0;
    }
    let longest = e.chars().count().max(g.chars().count());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(&e, &g) as f64 / longest as f64
}
