"""Goodness-of-fit testing for the standard Cauchy distribution.

The package centers on two empirical likelihood ratio tests built from
jackknife pseudo-values of a third-order U-statistic that characterizes
C(0, 1), alongside nine classical competitors calibrated by Monte Carlo,
plus study tooling to measure size and power of all eleven on a grid of
alternatives.
"""

from ._version import __version__
from .classical_tests import (
    ALL_TESTS,
    CLASSICAL_TESTS,
    EL_TESTS,
    BatteryConfig,
    CriticalValueTable,
    TableStore,
    TestOutcome,
    cm_stat,
    default_window,
    evaluate_test,
    gh_stat,
    he_stat,
    kl_stat,
    ks_stat,
    ma_stat,
    mc_null_distribution,
    mc_p_value,
    run_battery,
    za_stat,
    zb_stat,
    zc_stat,
)
from .distributions import (
    DistributionSpec,
    Sample,
    as_sample,
    cauchy_cdf,
    cauchy_pdf,
    cauchy_quantile,
    cauchy_sf,
    chisq1_sf,
    compute_returns,
    sample_distribution,
    standard_cauchy,
    standardize,
)
from .empirical_likelihood import (
    ELSolution,
    ajel_test,
    jel_test,
    solve_lambda,
)
from .errors import (
    CauchyGofError,
    HullViolationError,
    NumericalError,
    NumericalWarning,
    ValidationError,
)
from .reporting import (
    ReportDocument,
    histogram_data,
    parse_input,
    qq_points,
    render_outcomes,
    write_histogram_csv,
    write_qq_csv,
)
from .seeding import derive_rep_seed
from .simulation import (
    StudyConfig,
    StudyResult,
    StudyRow,
    power_study,
    run_study,
    size_study,
)
from .ustat import (
    KernelMode,
    PseudoValues,
    delta_star,
    kernel_indicator,
    leave_one_out_deltas,
    pseudo_values,
    symmetrized_kernel,
)

__all__ = [
    "__version__",
    "ALL_TESTS",
    "CLASSICAL_TESTS",
    "EL_TESTS",
    "BatteryConfig",
    "CauchyGofError",
    "CriticalValueTable",
    "DistributionSpec",
    "ELSolution",
    "HullViolationError",
    "KernelMode",
    "NumericalError",
    "NumericalWarning",
    "PseudoValues",
    "ReportDocument",
    "Sample",
    "StudyConfig",
    "StudyResult",
    "StudyRow",
    "TableStore",
    "TestOutcome",
    "ValidationError",
    "ajel_test",
    "as_sample",
    "cauchy_cdf",
    "cauchy_pdf",
    "cauchy_quantile",
    "cauchy_sf",
    "chisq1_sf",
    "cm_stat",
    "compute_returns",
    "default_window",
    "evaluate_test",
    "delta_star",
    "derive_rep_seed",
    "gh_stat",
    "he_stat",
    "histogram_data",
    "jel_test",
    "kernel_indicator",
    "kl_stat",
    "ks_stat",
    "leave_one_out_deltas",
    "ma_stat",
    "mc_null_distribution",
    "mc_p_value",
    "parse_input",
    "power_study",
    "pseudo_values",
    "qq_points",
    "render_outcomes",
    "run_battery",
    "run_study",
    "sample_distribution",
    "size_study",
    "solve_lambda",
    "standard_cauchy",
    "standardize",
    "symmetrized_kernel",
    "write_histogram_csv",
    "write_qq_csv",
    "za_stat",
    "zb_stat",
    "zc_stat",
]
