"""Enumerative coding of run-length-limited binary words with ring-constrained DFT spectra."""

from .codec import (
    CodebookProfile,
    CodecState,
    ConstraintViolation,
    IndexOutOfRange,
    RingViolation,
    codebook_size,
    decode_to_index,
    encode_from_index,
    prefix_weight_W,
)
from .constraints import UNCONSTRAINED, Ring, RingSet, RunLengthConstraints, ring_contains, ringset_contains
from .counting import (
    count_charge,
    count_ring_scalar,
    count_ring_scalar_leading,
    count_ring_vector,
    count_ring_vector_leading,
)
from .spectral import (
    ExactSum,
    concat_spectrum,
    dft_component,
    nrzi_encode,
    shift_center_after_ones_prefix,
    shift_center_after_zeros_prefix,
    trailing_run_sum,
)

__version__ = "0.1.0"
