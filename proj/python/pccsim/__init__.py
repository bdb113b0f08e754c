"""Single-parity-check code toolkit: encoding, flip/hard/soft decoding over
Rayleigh fading, closed-form error bounds, and a Monte Carlo BER harness."""

from ._pccsim import (
    BerEstimate,
    BitBlock,
    CellResult,
    ChannelObservation,
    CodeParams,
    DecodeResult,
    Rng,
    SimulationConfig,
    SnrPoint,
    SweepResult,
    bpsk_map,
    chernoff_pbar,
    decode_throughput_probe,
    diversity_slope,
    encode,
    fd_bound,
    fd_bound_components,
    flip_decode,
    generator_matrix,
    hard_bound,
    hard_decide,
    measure_diversity,
    one_error_bound,
    one_error_bound_component_form,
    order_stat_pdf_largest,
    order_stat_pdf_second,
    p2_bar,
    parity_check_matrix,
    parity_ok,
    pn_bar,
    rayleigh_sample,
    run_cell,
    run_sweep,
    soft_bound,
    soft_ml_decode,
    transmit,
    two_or_more_bound,
    wagner_decode,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
