#pragma once

// Everything except the JSON layer (barnes/json_io.hpp), which needs nlohmann/json.

#include "barnes/errors.hpp"
#include "barnes/rational.hpp"
#include "barnes/polynomial.hpp"
#include "barnes/poly_core.hpp"
#include "barnes/poly_identities.hpp"
#include "barnes/kernels/complex_util.hpp"
#include "barnes/kernels/log_gamma.hpp"
#include "barnes/kernels/polygamma.hpp"
#include "barnes/kernels/q_pochhammer.hpp"
#include "barnes/kernels/elliptic.hpp"
#include "barnes/kernels/quadrature.hpp"
#include "barnes/modular_forms.hpp"
#include "barnes/double_gamma.hpp"
#include "barnes/modular_forms_via_G.hpp"
#include "barnes/asymptotics.hpp"
#include "barnes/gamma2.hpp"
#include "barnes/integral_repr.hpp"
#include "barnes/identities.hpp"
#include "barnes/convergence.hpp"
