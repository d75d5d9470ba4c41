"""Exact-arithmetic partition norm toolkit.

The heavy lifting lives in the compiled ``partnorm._core`` extension; this
package re-exports its public surface. Big integers arrive as Python ints
and exact rationals as :class:`fractions.Fraction`.
"""

from ._core import (  # noqa: F401
    EvalResult,
    ExpectedNorm,
    ExtremalResult,
    ExtremalSource,
    MinSizeResult,
    Partition,
    PiValue,
    __version__,
    bernoulli_number,
    brute_extremal_norm,
    change_of_variables_check,
    class_names,
    dotted_count,
    distinct_closed_form_applies,
    distinct_zeta,
    enumerate_partitions,
    euler_gamma,
    euler_partition_coeffs,
    expected_norm,
    factorize,
    fixed_length_zeta_closed_s2,
    fixed_length_zeta_direct,
    fixed_length_zeta_faa,
    fixed_length_zeta_faa_exact,
    golden_ratio_series,
    golden_ratio_target,
    in_class,
    is_prime,
    k_dotted_count,
    lehmer_sum,
    lehmer_sum_distinct,
    lehmer_sums,
    lehmer_sums_distinct,
    macmahon_coeff,
    macmahon_expected_multiplicity,
    max_norm,
    max_norm_distinct,
    max_norm_odd,
    max_norm_rr,
    min_size_for_norm,
    multicolor_count,
    multiplicative_partitions,
    nuclear_partitions_of_norm,
    nuclear_zeta_dirichlet,
    p_dot,
    p_dot_sequence,
    partition_numbers,
    partition_zeta_product,
    pentagonal_p,
    phi_dirichlet_check,
    phi_divisor_sum_check,
    phi_partition,
    riemann_zeta,
    riemann_zeta_even_exact,
    run_verify_suite,
    sample_macmahon,
    sample_macmahon_many,
    sigma,
    stieltjes_gamma1,
    subpartition_count,
    subpartitions,
    verify_passes,
    verify_suite_names,
)
