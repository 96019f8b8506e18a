//! Size caps, overridable from the environment.

/// Enumeration cap for points and lattice searches (`MULTIREG_ENUM_CAP`).
pub fn enum_cap() -> usize {
    env_cap("MULTIREG_ENUM_CAP", 2_000_000)
}

/// Maximum number of generators for a Taylor complex (`MULTIREG_TAYLOR_CAP`).
pub fn taylor_cap() -> usize {
    env_cap("MULTIREG_TAYLOR_CAP", 16)
}

/// Maximum number of fan rays for primitive collections (`MULTIREG_RAY_CAP`).
pub fn ray_cap() -> usize {
    env_cap("MULTIREG_RAY_CAP", 20)
}

fn env_cap(name: &str, default: usize) -> usize {
    std::env::var(name).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
}
