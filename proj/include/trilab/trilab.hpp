#pragma once

#include "trilab/automorphism.hpp"
#include "trilab/bi_dataset.hpp"
#include "trilab/canonical.hpp"
#include "trilab/checked.hpp"
#include "trilab/ehrhart.hpp"
#include "trilab/enumerate.hpp"
#include "trilab/geometry.hpp"
#include "trilab/normal_form.hpp"
#include "trilab/oeis.hpp"
#include "trilab/q_simplex.hpp"
#include "trilab/rational.hpp"
#include "trilab/series.hpp"
#include "trilab/widths.hpp"
