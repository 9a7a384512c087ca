#pragma once

#include "fdfa/classes.hpp"
#include "fdfa/construction.hpp"
#include "fdfa/dfa.hpp"
#include "fdfa/error.hpp"
#include "fdfa/fmin.hpp"
#include "fdfa/isomorphism.hpp"
#include "fdfa/language.hpp"
#include "fdfa/minimize.hpp"
#include "fdfa/parts.hpp"
#include "fdfa/random.hpp"
