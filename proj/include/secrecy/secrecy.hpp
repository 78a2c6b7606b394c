#pragma once

#include "secrecy/geometry_channel.hpp"
#include "secrecy/fj_opt.hpp"
#include "secrecy/policy.hpp"
#include "secrecy/sim.hpp"
#include "secrecy/io.hpp"
#include "secrecy/commands.hpp"
