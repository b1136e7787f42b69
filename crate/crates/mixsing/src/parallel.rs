//! Thread fan-out for the criticality search. Results never depend on the
//! worker count: every start owns its random stream and partial reports are
//! merged in start order.

use std::thread;

use mixsing_core::nondeg::{search_critical, search_critical_range, SearchConfig, SearchReport};
use mixsing_core::{MixedPolynomial, Result};

/// Worker count: available parallelism, capped by `MST_THREADS` when set.
pub fn threads() -> usize {
    let avail = thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("MST_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => avail.min(cap),
        _ => avail,
    }
}

pub fn search(f: &MixedPolynomial, cfg: &SearchConfig, workers: usize) -> Result<SearchReport> {
    let workers = workers.clamp(1, cfg.starts.max(1));
    if workers == 1 {
        return search_critical(f, cfg);
    }
    let chunk = cfg.starts.div_ceil(workers);
    let parts: Vec<Result<SearchReport>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = (w * chunk).min(cfg.starts)..((w + 1) * chunk).min(cfg.starts);
                s.spawn(move || search_critical_range(f, cfg, range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SearchReport::merge(parts, cfg).expect("at least one worker"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mixsing_core::parse::parse;

    #[test]
    fn worker_count_does_not_change_results() {
        let f = parse("z1*~z1 + z2*~z2", &Default::default()).unwrap();
        let cfg = SearchConfig { starts: 101, max_candidates: 7, ..Default::default() };
        let one = search(&f, &cfg, 1).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(search(&f, &cfg, w).unwrap(), one);
        }
    }
}
