#pragma once

#include "errors.hpp"
#include "evaluation.hpp"
#include "gamma.hpp"
#include "identity.hpp"
#include "identity_report.hpp"
#include "lavoie_trottier.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "run_config.hpp"
#include "struve.hpp"
#include "wright.hpp"
