"""Python interface to the spikebench core.

The heavy lifting lives in the `_spikebench` extension module; this package
re-exports its functions.
"""

from _spikebench import (  # noqa: F401
    __version__,
    derivative,
    encode_all,
    encode_spike_train,
    evaluate_target,
    hh_rate_constants,
    initial_state,
    l2_error,
    model_kinds,
    predict,
    run_grid_json,
    run_regression,
    simulate_neuron,
    step,
    train_synapse,
)
