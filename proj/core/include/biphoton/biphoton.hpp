#pragma once

#include "biphoton/errors.hpp"
#include "biphoton/grid.hpp"
#include "biphoton/heralding.hpp"
#include "biphoton/io.hpp"
#include "biphoton/modulator.hpp"
#include "biphoton/numerics.hpp"
#include "biphoton/spectrum.hpp"
#include "biphoton/version.hpp"
#include "biphoton/waveform.hpp"
