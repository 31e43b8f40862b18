"""Hide an authenticating image in the vertical Haar subband of a cover."""

from ._core import (
    AtfdwtError,
    adjust,
    capacity_bytes,
    compute_metrics,
    embed,
    embed_pair,
    extract,
    extract_pair,
    forward_haar,
    image_fidelity,
    inverse_haar,
    mse,
    parse_ppm,
    position_pair,
    psnr,
    psnr_from_mse,
    reconstruct_block,
    std_dev,
    verify,
    write_ppm,
)

__all__ = [
    "AtfdwtError",
    "adjust",
    "capacity_bytes",
    "compute_metrics",
    "embed",
    "embed_pair",
    "extract",
    "extract_pair",
    "forward_haar",
    "image_fidelity",
    "inverse_haar",
    "mse",
    "parse_ppm",
    "position_pair",
    "psnr",
    "psnr_from_mse",
    "reconstruct_block",
    "std_dev",
    "verify",
    "write_ppm",
]
