#pragma once

#include "common.hpp"
#include "counters.hpp"
#include "rotation.hpp"
#include "perfect_shuffle.hpp"
#include "merge_core.hpp"
#include "merge.hpp"
