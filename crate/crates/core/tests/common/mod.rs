//! Helpers shared by the integration tests: a braid-equality oracle built on
//! the (faithful) Artin action on the free group, and random word samplers.
#![allow(dead_code)]

use braidtwist::{BraidWord, Letter};
use rand::Rng;

fn reduce_push(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

/// Image of the free generator `x_g` (or its inverse for `g < 0`) under one
/// braid letter.
fn letter_image(letter: Letter, g: i32) -> Vec<i32> {
    let i = letter.abs();
    let x = g.abs();
    let img: Vec<i32> = match (letter > 0, x) {
        (true, x) if x == i => vec![i, i + 1, -i],
        (true, x) if x == i + 1 => vec![i],
        (false, x) if x == i => vec![i + 1],
        (false, x) if x == i + 1 => vec![-(i + 1), i, i + 1],
        _ => vec![x],
    };
    if g > 0 {
        img
    } else {
        img.iter().rev().map(|y| -y).collect()
    }
}

/// Images of `x_1, …, x_n` under the automorphism of the braid `w`.
pub fn artin_action(w: &BraidWord) -> Vec<Vec<i32>> {
    (1..=w.strands() as i32)
        .map(|j| {
            let mut word = vec![j];
            for &letter in w.letters().iter().rev() {
                let mut next = Vec::with_capacity(word.len() * 2);
                for &g in &word {
                    for y in letter_image(letter, g) {
                        reduce_push(&mut next, y);
                    }
                }
                word = next;
            }
            word
        })
        .collect()
}

/// True when `a` and `b` represent the same braid.
pub fn same_braid(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && artin_action(a) == artin_action(b)
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word_exact(rng, n, len)
}

pub fn random_word_exact<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as Letter);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

pub fn random_positive_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| rng.gen_range(1..n as Letter)).collect();
    BraidWord::new(n, letters).expect("letters in range")
}
