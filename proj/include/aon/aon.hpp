#pragma once

#include <aon/bench.hpp>
#include <aon/core.hpp>
#include <aon/error.hpp>
#include <aon/exact.hpp>
#include <aon/fptas.hpp>
#include <aon/gen.hpp>
#include <aon/interval.hpp>
#include <aon/io.hpp>
#include <aon/rational.hpp>
#include <aon/reduction.hpp>
#include <aon/verify.hpp>
