#pragma once

#include "ris/allocation.hpp"
#include "ris/channel.hpp"
#include "ris/comparison.hpp"
#include "ris/config.hpp"
#include "ris/params.hpp"
#include "ris/power_snr.hpp"
#include "ris/sweep.hpp"
#include "ris/units.hpp"
