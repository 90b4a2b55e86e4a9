from topzeta.euler.cache import (
    CachedEulerStore,
    EulerCacheInterface,
    EulerRecord,
    MemoryEulerCache,
    SqlEulerCache,
    open_euler_cache,
    verify_cache,
)
from topzeta.euler.characteristic import (
    EulerCalculator,
    EulerResult,
    bkk_euler,
    euler_characteristic,
    khovanskii_nondegenerate,
)
from topzeta.euler.torus import (
    TorusSplit,
    TorusVariety,
    canonical_system,
    smooth_on_torus,
    system_key,
    torus_split,
)
from topzeta.euler.volumes import minkowski_combination, mixed_volume

__all__ = [
    "TorusVariety",
    "TorusSplit",
    "torus_split",
    "canonical_system",
    "system_key",
    "smooth_on_torus",
    "mixed_volume",
    "minkowski_combination",
    "EulerResult",
    "EulerCalculator",
    "khovanskii_nondegenerate",
    "bkk_euler",
    "euler_characteristic",
    "EulerRecord",
    "EulerCacheInterface",
    "MemoryEulerCache",
    "SqlEulerCache",
    "CachedEulerStore",
    "open_euler_cache",
    "verify_cache",
]
