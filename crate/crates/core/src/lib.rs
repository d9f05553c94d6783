pub mod asymptotics;
pub mod bijections;
pub mod codec;
pub mod enumerate;
pub mod exact;
pub mod register;
pub mod series;
pub mod stats;
pub mod structures;
