#pragma once

#include <mlbeta/verify/cases.hpp>
#include <mlbeta/verify/identity.hpp>
#include <mlbeta/verify/oracle_dispatch.hpp>
#include <mlbeta/verify/report_io.hpp>
#include <mlbeta/verify/sweep.hpp>
