#pragma once

#include "locallip/adapters.hpp"
#include "locallip/bounds.hpp"
#include "locallip/certificate.hpp"
#include "locallip/errors.hpp"
#include "locallip/family_io.hpp"
#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip/metrics.hpp"
#include "locallip/operators.hpp"
#include "locallip/random.hpp"
#include "locallip/signal.hpp"
#include "locallip/witness.hpp"
