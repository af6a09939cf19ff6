#pragma once

#include "whkit/algebra.hpp"
#include "whkit/driver.hpp"
#include "whkit/duality.hpp"
#include "whkit/frobenius.hpp"
#include "whkit/groupoid.hpp"
#include "whkit/groupoid_algebras.hpp"
#include "whkit/integrals.hpp"
#include "whkit/io.hpp"
#include "whkit/linalg.hpp"
#include "whkit/report.hpp"
#include "whkit/rng.hpp"
#include "whkit/scalar.hpp"
#include "whkit/weak_hopf.hpp"
