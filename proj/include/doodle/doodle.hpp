#pragma once

// Umbrella header.

#include "doodle/canonical.hpp"
#include "doodle/claims.hpp"
#include "doodle/confluence.hpp"
#include "doodle/enumeration.hpp"
#include "doodle/equality.hpp"
#include "doodle/faces.hpp"
#include "doodle/families.hpp"
#include "doodle/gauss_code.hpp"
#include "doodle/json_io.hpp"
#include "doodle/map.hpp"
#include "doodle/moves.hpp"
#include "doodle/pd_code.hpp"
#include "doodle/render.hpp"
#include "doodle/virtualization.hpp"
