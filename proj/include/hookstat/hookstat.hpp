#ifndef HOOKSTAT_HOOKSTAT_HPP
#define HOOKSTAT_HOOKSTAT_HPP

#include "closed_forms.hpp"
#include "exact.hpp"
#include "hook_statistics.hpp"
#include "partitions.hpp"
#include "rsk.hpp"
#include "series.hpp"
#include "verify.hpp"

#endif
