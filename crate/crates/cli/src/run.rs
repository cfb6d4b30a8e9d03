//! Task planning and parallel execution.

use rayon::prelude::*;

use qcong_core::bigmath::odd_primes_up_to;
use qcong_core::congruence::{check, ClaimId};

use crate::identity::IdentityId;
use crate::report::{sort_records, Record};

/// One unit of work. Workers never split a task.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Identity(IdentityId, u64),
    Congruence(ClaimId, u64),
}

impl Task {
    pub fn run(self) -> Record {
        match self {
            Task::Identity(id, i) => id.check(i),
            Task::Congruence(claim, i) => match check(claim, i) {
                Ok(report) => report.into(),
                Err(e) => Record::failure(claim.as_str(), i, e),
            },
        }
    }
}

pub fn identity_tasks(ids: &[IdentityId], max_n: u64) -> Vec<Task> {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    ids.into_iter()
        .flat_map(|id| id.instances(max_n).map(move |i| Task::Identity(id, i)))
        .collect()
}

/// Odd primes up to `limit` for the prime-indexed claims, odd `n` otherwise.
pub fn congruence_tasks(ids: &[ClaimId], limit: u64) -> Vec<Task> {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let primes = odd_primes_up_to(limit);
    let mut tasks = Vec::new();
    for id in ids {
        if id.is_prime_indexed() {
            tasks.extend(primes.iter().map(|&p| Task::Congruence(id, p)));
        } else {
            tasks.extend((1..=limit).step_by(2).map(|n| Task::Congruence(id, n)));
        }
    }
    tasks
}

/// Runs every task on a pool of `jobs` threads (rayon's default when `None`)
/// and returns the records in claim, then instance order.
pub fn execute(tasks: Vec<Task>, jobs: Option<usize>) -> anyhow::Result<Vec<Record>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    let mut records: Vec<Record> = pool.install(|| {
        tasks
            .into_par_iter()
            .with_max_len(1)
            .map(Task::run)
            .collect()
    });
    sort_records(&mut records);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruence_instance_sets() {
        let t = congruence_tasks(&[ClaimId::Eq8, ClaimId::Eq7], 50);
        assert_eq!(t.len(), 28);
        assert_eq!(t[0], Task::Congruence(ClaimId::Eq7, 3));
        let t = congruence_tasks(&[ClaimId::Eq3], 9);
        let ns: Vec<u64> = t
            .iter()
            .map(|t| match t {
                Task::Congruence(_, n) => *n,
                Task::Identity(..) => unreachable!(),
            })
            .collect();
        assert_eq!(ns, vec![1, 3, 5, 7, 9]);
    }

    #[test]
    fn duplicate_ids_collapse() {
        let t = identity_tasks(&[IdentityId::Eq12, IdentityId::Eq12], 2);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn order_independent_of_jobs() {
        let strip = |rs: Vec<Record>| {
            rs.into_iter()
                .map(|r| (r.claim, r.instance, r.holds, r.lhs, r.rhs, r.modulus))
                .collect::<Vec<_>>()
        };
        let tasks = congruence_tasks(&[ClaimId::Eq6, ClaimId::Eq5], 40);
        let one = strip(execute(tasks.clone(), Some(1)).unwrap());
        let four = strip(execute(tasks, Some(4)).unwrap());
        assert_eq!(one, four);
    }
}
