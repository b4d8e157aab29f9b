#ifndef MODO_GOLDEN_DATA_HPP
#define MODO_GOLDEN_DATA_HPP

// Golden demo reports, frozen from verified runs. Regenerate with
// `modo demo <name> [--format json] --print-only` and re-check the values
// against the unit and acceptance tests before updating.

namespace modo::demos {

inline const char* akns_text = R"GOLD(demo: akns
== curve
f: mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'
commutator_is_zero: true
constancy_verified: true
coefficients_in_Qi: false
degree_mu: 2
degree_lambda: 4
leading_mu_coeff: 1
leading_lambda_coeff: 4
== bcgen
f: mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'
f_is_bc: true
f_red: mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'
factor: mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'  sigma: 1  r: 1
F: mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'
decomposition: C[lambda,mu]/(mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v')
trivial_case: none
factorization_source: builtin
== verify
check commutator_zero: PASS
check curve_coefficients_constant: PASS
check mu_degree_and_leading: PASS
check lambda_degree_structure: PASS
check f_of_pair_is_zero: PASS
check riccati_residual_zero: PASS
verify: PASS
)GOLD";

inline const char* ex71_text = R"GOLD(demo: ex71
== curve
f: mu^2 + 4*lambda^4 + 16*lambda + 12
commutator_is_zero: true
constancy_verified: true
coefficients_in_Qi: true
degree_mu: 2
degree_lambda: 4
leading_mu_coeff: 1
leading_lambda_coeff: 4
== bcgen
f: mu^2 + 4*lambda^4 + 16*lambda + 12
f_is_bc: true
f_red: mu^2 + 4*lambda^4 + 16*lambda + 12
factor: mu^2 + 4*lambda^4 + 16*lambda + 12  sigma: 1  r: 1
F: mu^2 + 4*lambda^4 + 16*lambda + 12
decomposition: C[lambda,mu]/(mu^2 + 4*lambda^4 + 16*lambda + 12)
trivial_case: none
factorization_source: builtin
== kernel at branch point
lambda: -1
mu: 0
on_curve: true
rank: 0
nullity: 2
basis: [1, 0]
basis: [0, 1]
== verify
check commutator_zero: PASS
check curve_coefficients_constant: PASS
check mu_degree_and_leading: PASS
check lambda_degree_structure: PASS
check f_of_pair_is_zero: PASS
check riccati_residual_zero: PASS
verify: PASS
)GOLD";

inline const char* ex72_text = R"GOLD(demo: ex72
== curve
f: mu^2 + 4*lambda^4
commutator_is_zero: true
constancy_verified: true
coefficients_in_Qi: true
degree_mu: 2
degree_lambda: 4
leading_mu_coeff: 1
leading_lambda_coeff: 4
== bcgen
f: mu^2 + 4*lambda^4
f_is_bc: true
f_red: mu^2 + 4*lambda^4
factor: mu - 2*i*lambda^2  sigma: 1  r: 1
factor: mu + 2*i*lambda^2  sigma: 1  r: 1
F: mu^2 + 4*lambda^4
decomposition: C[lambda,mu]/(mu - 2*i*lambda^2) x C[lambda,mu]/(mu + 2*i*lambda^2)
trivial_case: none
factorization_source: builtin
== kernel at branch point
lambda: 0
mu: 0
on_curve: true
rank: 1
nullity: 1
basis: [1, 0]
== verify
check commutator_zero: PASS
check curve_coefficients_constant: PASS
check mu_degree_and_leading: PASS
check lambda_degree_structure: PASS
check f_of_pair_is_zero: PASS
check riccati_residual_zero: PASS
verify: PASS
)GOLD";

inline const char* akns_json = R"GOLD({
  "F": "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'",
  "curve": {
    "coefficients_in_Qi": false,
    "commutator_is_zero": true,
    "constancy_verified": true,
    "degree_lambda": 4,
    "degree_mu": 2,
    "f": "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'",
    "leading_lambda_coeff": "4",
    "leading_mu_coeff": "1"
  },
  "decomposition": [
    "C[lambda,mu]/(mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v')"
  ],
  "demo": "akns",
  "f": "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'",
  "f_is_bc": true,
  "f_red": "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'",
  "factorization_source": "builtin",
  "factors": [
    {
      "poly": "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*u'*v)*lambda + u^2*v^2 + u'*v'",
      "r": 1,
      "sigma": 1
    }
  ],
  "trivial_case": null,
  "verify": {
    "checks": [
      {
        "name": "commutator_zero",
        "status": "PASS"
      },
      {
        "name": "curve_coefficients_constant",
        "status": "PASS"
      },
      {
        "name": "mu_degree_and_leading",
        "status": "PASS"
      },
      {
        "name": "lambda_degree_structure",
        "status": "PASS"
      },
      {
        "name": "f_of_pair_is_zero",
        "status": "PASS"
      },
      {
        "name": "riccati_residual_zero",
        "status": "PASS"
      }
    ],
    "ok": true
  }
}
)GOLD";

inline const char* ex71_json = R"GOLD({
  "F": "mu^2 + 4*lambda^4 + 16*lambda + 12",
  "curve": {
    "coefficients_in_Qi": true,
    "commutator_is_zero": true,
    "constancy_verified": true,
    "degree_lambda": 4,
    "degree_mu": 2,
    "f": "mu^2 + 4*lambda^4 + 16*lambda + 12",
    "leading_lambda_coeff": "4",
    "leading_mu_coeff": "1"
  },
  "decomposition": [
    "C[lambda,mu]/(mu^2 + 4*lambda^4 + 16*lambda + 12)"
  ],
  "demo": "ex71",
  "f": "mu^2 + 4*lambda^4 + 16*lambda + 12",
  "f_is_bc": true,
  "f_red": "mu^2 + 4*lambda^4 + 16*lambda + 12",
  "factorization_source": "builtin",
  "factors": [
    {
      "poly": "mu^2 + 4*lambda^4 + 16*lambda + 12",
      "r": 1,
      "sigma": 1
    }
  ],
  "kernel": {
    "basis": [
      [
        "1",
        "0"
      ],
      [
        "0",
        "1"
      ]
    ],
    "lambda": "-1",
    "mu": "0",
    "nullity": 2,
    "on_curve": true,
    "rank": 0
  },
  "trivial_case": null,
  "verify": {
    "checks": [
      {
        "name": "commutator_zero",
        "status": "PASS"
      },
      {
        "name": "curve_coefficients_constant",
        "status": "PASS"
      },
      {
        "name": "mu_degree_and_leading",
        "status": "PASS"
      },
      {
        "name": "lambda_degree_structure",
        "status": "PASS"
      },
      {
        "name": "f_of_pair_is_zero",
        "status": "PASS"
      },
      {
        "name": "riccati_residual_zero",
        "status": "PASS"
      }
    ],
    "ok": true
  }
}
)GOLD";

inline const char* ex72_json = R"GOLD({
  "F": "mu^2 + 4*lambda^4",
  "curve": {
    "coefficients_in_Qi": true,
    "commutator_is_zero": true,
    "constancy_verified": true,
    "degree_lambda": 4,
    "degree_mu": 2,
    "f": "mu^2 + 4*lambda^4",
    "leading_lambda_coeff": "4",
    "leading_mu_coeff": "1"
  },
  "decomposition": [
    "C[lambda,mu]/(mu - 2*i*lambda^2)",
    "C[lambda,mu]/(mu + 2*i*lambda^2)"
  ],
  "demo": "ex72",
  "f": "mu^2 + 4*lambda^4",
  "f_is_bc": true,
  "f_red": "mu^2 + 4*lambda^4",
  "factorization_source": "builtin",
  "factors": [
    {
      "poly": "mu - 2*i*lambda^2",
      "r": 1,
      "sigma": 1
    },
    {
      "poly": "mu + 2*i*lambda^2",
      "r": 1,
      "sigma": 1
    }
  ],
  "kernel": {
    "basis": [
      [
        "1",
        "0"
      ]
    ],
    "lambda": "0",
    "mu": "0",
    "nullity": 1,
    "on_curve": true,
    "rank": 1
  },
  "trivial_case": null,
  "verify": {
    "checks": [
      {
        "name": "commutator_zero",
        "status": "PASS"
      },
      {
        "name": "curve_coefficients_constant",
        "status": "PASS"
      },
      {
        "name": "mu_degree_and_leading",
        "status": "PASS"
      },
      {
        "name": "lambda_degree_structure",
        "status": "PASS"
      },
      {
        "name": "f_of_pair_is_zero",
        "status": "PASS"
      },
      {
        "name": "riccati_residual_zero",
        "status": "PASS"
      }
    ],
    "ok": true
  }
}
)GOLD";

} // namespace modo::demos

#endif
