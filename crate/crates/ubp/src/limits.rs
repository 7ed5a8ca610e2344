//! Size guards for operations whose cost explodes with k.
//!
//! The limits are process-wide so that the CLI can raise them once; library
//! callers get the defaults.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MONOID: usize = 6;
pub const DEFAULT_MODULE: usize = 5;
pub const DEFAULT_SYMFUNC: usize = 7;
/// Largest block count for which merge sets are enumerated.
pub const DEFAULT_MERGE_BLOCKS: usize = 16;

static MONOID: AtomicUsize = AtomicUsize::new(DEFAULT_MONOID);
static MODULE: AtomicUsize = AtomicUsize::new(DEFAULT_MODULE);
static SYMFUNC: AtomicUsize = AtomicUsize::new(DEFAULT_SYMFUNC);
static MERGE_BLOCKS: AtomicUsize = AtomicUsize::new(DEFAULT_MERGE_BLOCKS);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
	Monoid,
	Module,
	Symfunc,
	MergeBlocks,
}

fn slot(limit: Limit) -> &'static AtomicUsize {
	match limit {
		Limit::Monoid => &MONOID,
		Limit::Module => &MODULE,
		Limit::Symfunc => &SYMFUNC,
		Limit::MergeBlocks => &MERGE_BLOCKS,
	}
}

pub fn get(limit: Limit) -> usize {
	slot(limit).load(Ordering::Relaxed)
}

pub fn set(limit: Limit, value: usize) {
	slot(limit).store(value, Ordering::Relaxed);
}

/// Raises every limit to at least `k`.
pub fn raise_all(k: usize) {
	for l in [Limit::Monoid, Limit::Module, Limit::Symfunc, Limit::MergeBlocks] {
		slot(l).fetch_max(k, Ordering::Relaxed);
	}
}

pub(crate) fn check(limit: Limit, what: &'static str, k: usize) -> Result<()> {
	let max = get(limit);
	if k > max {
		Err(Error::Resource { what, k, limit: max })
	} else {
		Ok(())
	}
}
