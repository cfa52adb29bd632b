#pragma once

#include "braidmfw/errors.hpp"
#include "braidmfw/laurent.hpp"
#include "braidmfw/braid.hpp"
#include "braidmfw/destabilize.hpp"
#include "braidmfw/hecke.hpp"
#include "braidmfw/skein.hpp"
#include "braidmfw/homflypt.hpp"
#include "braidmfw/matrix.hpp"
#include "braidmfw/alexander.hpp"
#include "braidmfw/mfw.hpp"
#include "braidmfw/constructions.hpp"
#include "braidmfw/band3.hpp"
#include "braidmfw/knot_table.hpp"
