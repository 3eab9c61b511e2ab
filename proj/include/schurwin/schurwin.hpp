#pragma once

// Umbrella header.

#include "checked.hpp"
#include "partition.hpp"
#include "symfunc.hpp"
#include "bott.hpp"
#include "staircase.hpp"
#include "windows.hpp"
#include "shifts.hpp"
#include "format.hpp"
#include "verify.hpp"
#include "io.hpp"
