#![allow(dead_code)]

pub mod kn;
pub mod kn_check;
pub mod nfc;
pub mod stats;
