"""
Exact algebra for Cuntz semigroups.

Modules:
    - core_order: carriers, finite poms, law validation, O5/O6 scans
    - catalog: the named carriers (E_k, Nbar, Pbar, R_q, M1, Sex, Hex, ...)
    - finite_q: finite Q-semigroups, tau, ideals, quotients, morphism enumeration
    - paths: path expressions, comparison, suprema, dyadic chains
    - bivariant: hom monoids, [[S,T]], composition, evaluation, products
    - tensor: catalog tensor products and the universal-property falsifier
    - bivariant_checks: adjunction, solidness, ideal and bimodule checks
    - semiring_facts: the golden fact table
    - repro: the worked-example registry
"""
