#pragma once

#include <mlbeta/beta_operator.hpp>
#include <mlbeta/error.hpp>
#include <mlbeta/genfun.hpp>
#include <mlbeta/hypergeom.hpp>
#include <mlbeta/mittag_leffler.hpp>
#include <mlbeta/multi_series.hpp>
#include <mlbeta/numeric_kernel.hpp>
#include <mlbeta/oracles.hpp>
#include <mlbeta/quadrature.hpp>
#include <mlbeta/text.hpp>
#include <mlbeta/wright.hpp>
