//! Partitions, conjugacy classes and irreducible characters of `S_n`.

mod chartable;
mod partition;
pub mod reference;

pub use chartable::{
    align_to_reference, character_table, conjugate_pair_order, Alignment, CharacterTable, ClassData, MurnaghanNakayama,
    TableOrder, MAX_TABLE_DEGREE,
};
pub use partition::{class_size, factorial, partitions_of, Partition, MAX_PARTITION_DEGREE};
