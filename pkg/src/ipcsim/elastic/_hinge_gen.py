"""Generated by tools/gen_derivatives.py. Do not edit."""
import numpy as np
from numpy import sqrt, arctan2


def dihedral_angle(x0, x1, x2, x3):
    """Signed dihedral angle of the hinge (x0, x1) with wings x2, x3."""
    x0_0 = x0[..., 0]
    x0_1 = x0[..., 1]
    x0_2 = x0[..., 2]
    x1_0 = x1[..., 0]
    x1_1 = x1[..., 1]
    x1_2 = x1[..., 2]
    x2_0 = x2[..., 0]
    x2_1 = x2[..., 1]
    x2_2 = x2[..., 2]
    x3_0 = x3[..., 0]
    x3_1 = x3[..., 1]
    x3_2 = x3[..., 2]
    t0 = x0_0 - x1_0
    t1 = t0**2
    t2 = x0_1 - x1_1
    t3 = t2**2
    t4 = x0_2 - x1_2
    t5 = t4**2
    t6 = t3 + t5
    t7 = t1 + t6
    t8 = sqrt(t7)
    t9 = t8**(-1.0)
    t10 = -t0
    t11 = -x3_1
    t12 = t11 + x0_1
    t13 = -t12
    t14 = t10*t13
    t15 = -x3_0
    t16 = t15 + x0_0
    t17 = -t16
    t18 = -t2
    t19 = t17*t18
    t20 = t14 - t19
    t21 = -x2_2
    t22 = t21 + x0_2
    t23 = -t22
    t24 = t10*t23
    t25 = -x2_0
    t26 = t25 + x0_0
    t27 = -t26
    t28 = -t4
    t29 = t27*t28
    t30 = t24 - t29
    t31 = t20*t30
    t32 = -x2_1
    t33 = t32 + x0_1
    t34 = t0*t33
    t35 = t2*t26
    t36 = -t35
    t37 = t34 + t36
    t38 = -x3_2
    t39 = t38 + x0_2
    t40 = t0*t39
    t41 = t16*t4
    t42 = -t41
    t43 = t40 + t42
    t44 = t37*t43
    t45 = t31 - t44
    t46 = -t39
    t47 = t18*t46
    t48 = t13*t28
    t49 = t47 - t48
    t50 = t2*t22
    t51 = t33*t4
    t52 = -t51
    t53 = t50 + t52
    t54 = t30*t49 - t43*t53
    t55 = t2*t39
    t56 = t12*t4
    t57 = -t56
    t58 = t55 + t57
    t59 = t0*t12
    t60 = t16*t2
    t61 = -t60
    t62 = t59 + t61
    t63 = -t0*t45 - t2*(-t37*t58 + t53*t62) + t4*t54
    t64 = t20*t37 + t30*t43 + t49*t53
    t65 = t32 + x1_1
    t66 = t20*t65
    t67 = t38 + x1_2
    t68 = t30*t67
    t69 = t11 + x1_1
    t70 = t37*t69
    t71 = t21 + x1_2
    t72 = t43*t71
    t73 = t70 + t72
    t74 = t66 + t68 + t73
    t75 = t63*t74
    t76 = t43*t65
    t77 = t37*t67
    t78 = t0*(t20*t71 + t30*t69 - t76 - t77)
    t79 = -t69
    t80 = t18*t23
    t81 = -t33
    t82 = t28*t81
    t83 = -t82
    t84 = t80 + t83
    t85 = -t49
    t86 = -t65*t85 + t79*t84
    t87 = t2*t86
    t88 = -t71
    t89 = -t67*t84 + t85*t88
    t90 = t4*t89
    t91 = t7**(-1.0)
    t92 = t10*t81
    t93 = t18*t27
    t94 = -t93
    t95 = t92 + t94
    t96 = t10*t46
    t97 = t17*t28
    t98 = -t97
    t99 = t96 + t98
    t100 = t95*t99
    t101 = -t20
    t102 = -t30
    t103 = t101*t102
    t104 = t100 - t103
    t105 = t102*t85
    t106 = t84*t99
    t107 = t105 - t106
    t108 = t20*t53
    t109 = t37*t49
    t110 = t0*t104 + t107*t4 - t2*(t108 - t109)
    t111 = t110*t91
    t112 = t0*t111
    t113 = t112 + t45
    t114 = t113 + t78 - t87 - t90
    t115 = t114*t64
    t116 = t64**2
    t117 = (t116 + t63**2*t91)**(-1.0)
    t118 = t117*t9
    t119 = t25 + x1_0
    t120 = t15 + x1_0
    t121 = t120*t37
    t122 = -t53*t67
    t123 = t121 + t122
    t124 = t119*t62 + t123 - t58*t71
    t125 = t124*t63
    t126 = -t110*t2*t91
    t127 = -t119
    t128 = -t102*t120 + t127*t99
    t129 = -t67
    t130 = t102*t129 - t71*t99
    t131 = t119*t49
    t132 = -t120*t53 + t131
    t133 = t20*t71
    t134 = t133 - t77
    t135 = t132 + t134
    t136 = -t108 + t109
    t137 = t0*t128 + t130*t4 - t135*t2 + t136
    t138 = t126 + t137
    t139 = -t138
    t140 = t0*t22
    t141 = t26*t4
    t142 = -t141
    t143 = t140 + t142
    t144 = t119*t43
    t145 = t53*t69
    t146 = t144 + t145
    t147 = t120*t143 + t146 + t58*t65
    t148 = t147*t63
    t149 = -t110*t4*t91
    t150 = -t120
    t151 = -t101*t119 + t150*t95
    t152 = -t65
    t153 = t101*t152 - t69*t95
    t154 = t30*t69
    t155 = t154 - t76
    t156 = t132 + t155
    t157 = t0*t151 + t153*t2 - t156*t4 + t54
    t158 = t149 + t157
    t159 = -t158
    t160 = t22*t43
    t161 = t12*t37
    t162 = t160 + t161
    t163 = -t101*t22 - t102*t12 + t46*t95 + t81*t99
    t164 = t33*t49
    t165 = t12*t53
    t166 = t164 - t165
    t167 = t166*t2
    t168 = t22*t49
    t169 = -t39*t53
    t170 = t168 + t169
    t171 = t170*t4
    t172 = t0*t163 - t167 - t171
    t173 = t20*t26
    t174 = t16*t37
    t175 = -t168 + t169 + t173 + t174
    t176 = t175*t63
    t177 = t26*t43
    t178 = t16*t30
    t179 = t30*t39
    t180 = t101*t23 + t17*t84 - t26*t85 - t39*t95
    t181 = t0*(-t177 + t178) + t136 - t180*t2 + t4*(-t160 + t179)
    t182 = -t181 + t2*t63*t91
    t183 = t182*t64
    t184 = t164 + t165 + t177 + t178
    t185 = t184*t63
    t186 = t173 - t174
    t187 = t20*t33
    t188 = -t161 + t187
    t189 = t102*t13 - t16*t84 + t27*t85 - t33*t99
    t190 = t0*t186 + t188*t2 - t189*t4 + t54
    t191 = -t190 + t4*t63*t91
    t192 = t191*t64
    t193 = -t101*t28 + t2*t99
    t194 = t0*t193 + t3*t49 + t49*t5
    t195 = t2*t20
    t196 = t4*t43
    t197 = t195 + t196
    t198 = t110*t197
    t199 = -t194*t64 + t198
    t200 = t110**2*t91 + t116
    t201 = t200**(-1.0)
    t202 = t201*t9
    t203 = t0*t49
    t204 = t20*t4
    t205 = t203 + t204
    t206 = t1*t43 + t2*t205 + t43*t5
    t207 = t0*t20
    t208 = t4*t49
    t209 = -t208
    t210 = t207 + t209
    t211 = t110*t210
    t212 = -t206*t64 + t211
    t213 = t0*t85 - t18*t99
    t214 = t1*t20 + t20*t3 + t213*t4
    t215 = t214*t64
    t216 = t0*t43
    t217 = t2*t49
    t218 = t216 + t217
    t219 = t110*t218
    t220 = t215 + t219
    t221 = t2*t30
    t222 = t37*t4
    t223 = t221 - t222
    t224 = t0*t223 + t3*t53 + t5*t53
    t225 = t224*t64
    t226 = t2*t37
    t227 = t30*t4
    t228 = t226 + t227
    t229 = t110*t228 + t225
    t230 = t0*t84 - t28*t95
    t231 = t1*t30 + t2*t230 + t30*t5
    t232 = t0*t37
    t233 = t4*t53
    t234 = -t233
    t235 = t232 + t234
    t236 = t110*t235 + t231*t64
    t237 = t0*t53
    t238 = -t221
    t239 = t237 + t238
    t240 = t1*t37 - t239*t4 + t3*t37
    t241 = t0*t30
    t242 = t2*t53
    t243 = t241 + t242
    t244 = t110*t243 - t240*t64
    t245 = t65*t69
    t246 = t67*t71
    t247 = t112*t74
    t248 = -t31 + t44
    t249 = t248 - t78 + t87 + t90
    t250 = -t114
    t251 = t65*t67
    t252 = -t251 + t69*t71
    t253 = 2*t0
    t254 = t249*t91
    t255 = 3/t7**2
    t256 = t110*t255
    t257 = t1*t256
    t258 = t111 - t257
    t259 = 2*t133 - 2*t37*t67
    t260 = 2*t154 - 2*t43*t65
    t261 = t101*t95 + t102*t99 + t84*t85
    t262 = t18**2
    t263 = t10**2
    t264 = t28**2
    t265 = t263 + t264
    t266 = t262 + t265
    t267 = t85*t95
    t268 = t101*t84
    t269 = t267 - t268
    t270 = -t10*t104 - t107*t28 + t18*t269
    t271 = t270**2/t266**2
    t272 = t270/t266
    t273 = t10*t271 + t261*(t101*t65 + t102*t67 + t79*t95 + t88*t99) + t272*(t10*(t101*t88 + t102*t79 - t65*t99 - t67*t95) + t104 - t18*t86 - t28*t89)
    t274 = 2*t110
    t275 = t274*t74
    t276 = t119*t69
    t277 = t111*t2
    t278 = t277*t74
    t279 = t119*t20
    t280 = t49*t71
    t281 = t123 + t279 - t280
    t282 = t120*t30
    t283 = t49*t65
    t284 = t282 + t283
    t285 = t0*t91
    t286 = -t137*t285 - t144
    t287 = t0*t110
    t288 = t2*t287
    t289 = t255*t288
    t290 = -t145 - t2*t254 + t289
    t291 = t18*t271 + t261*(t101*t127 + t120*t95 + t129*t84 + t71*t85) + t272*(-t10*t128 - t130*t28 + t18*(-t101*t71 - t120*t84 + t127*t85 + t129*t95) - t267 + t268)
    t292 = t201*t291
    t293 = t119*t67
    t294 = t120*t71
    t295 = t111*t4
    t296 = t295*t74
    t297 = t146 + t284
    t298 = t122 - t254*t4 + t280
    t299 = t287*t4
    t300 = t255*t299
    t301 = -t121 - t157*t285 + t279 + t300
    t302 = t261*(t102*t150 + t119*t99 + t152*t85 + t69*t84) + t271*t28 + t272*(-t10*t151 + t107 - t153*t18 + t28*(-t102*t69 - t119*t85 + t150*t84 + t152*t99))
    t303 = t201*t302
    t304 = t22*t67
    t305 = t304 + t39*t71
    t306 = t33*t69
    t307 = t12*t65
    t308 = t306 + t307
    t309 = t0*t163 - t167 - t171 - t248
    t310 = t162 + t179 + t187
    t311 = t20*t22
    t312 = t37*t39
    t313 = t311 - t312
    t314 = t12*t30
    t315 = t33*t43
    t316 = t314 - t315
    t317 = t0*t271 + t261*(t101*t81 + t102*t46 + t12*t95 + t22*t99) + t272*(-t10*t163 - t100 + t103 + t18*(-t12*t84 + t81*t85) + t28*(-t22*t85 + t46*t84))
    t318 = t201*t317
    t319 = 2*t64
    t320 = t250*t319
    t321 = t16*t65
    t322 = t26*t69 + t37
    t323 = -t181
    t324 = -t175
    t325 = t26*t67
    t326 = -t40 + t41
    t327 = t16*t71
    t328 = t143 + t327
    t329 = t39*t65
    t330 = t22*t69
    t331 = -t55 + t56
    t332 = t331 + t53
    t333 = t304 - t39*t71
    t334 = -t177 + t178 + t285*t323
    t335 = t2*t271 + t261*(t101*t26 + t17*t95 + t23*t85 + t39*t84) + t272*(t10*(t102*t17 - t26*t99) - t18*t180 + t269 + t28*(-t102*t39 + t23*t99))
    t336 = t201*t335
    t337 = -t190
    t338 = t306 - t307
    t339 = t33*t67
    t340 = t12*t71
    t341 = -t14 + t19
    t342 = t341 + t95
    t343 = t186 + t285*t337 + t300
    t344 = t261*(t102*t16 + t13*t84 + t27*t99 + t33*t85) + t271*t4 + t272*(t10*(t101*t27 - t16*t95) - t105 + t106 + t18*(-t101*t33 + t13*t95) - t189*t28)
    t345 = t201*t344
    t346 = t2*t69
    t347 = t4*t67
    t348 = t2*t67
    t349 = t194*t285
    t350 = t2*t43
    t351 = -t204 + t350
    t352 = t28*t99
    t353 = t18*t85
    t354 = t261*(t101*t2 + t352) + t272*(-t10*t193 + t2*t353 - t264*t85)
    t355 = t201*t354
    t356 = t0*t69
    t357 = t356 + t62
    t358 = -t5*t67
    t359 = -t96 + t97
    t360 = -t47 + t48
    t361 = t206*t285
    t362 = t0*t62 - t4*t58
    t363 = t111*t206 + t210*t64
    t364 = -t350
    t365 = t203 + t364
    t366 = t1*t62 + t3*t62 - t365*t4
    t367 = t0*t67
    t368 = -t3*t69
    t369 = t2*t58 + t216
    t370 = t110*t214*t91 - t218*t64
    t371 = 2*t117
    t372 = t370*t371
    t373 = t2*t65
    t374 = t4*t71
    t375 = t2*t71
    t376 = t4*t65
    t377 = t224*t285
    t378 = t18*t95
    t379 = t28*t84
    t380 = t261*(t102*t4 + t378) + t272*(t10*(t102*t18 - t4*t95) - t262*t84 + t379*t4)
    t381 = t201*t380
    t382 = t222 + t237
    t383 = t1*t143 + t143*t5 + t2*t382
    t384 = t0*t65
    t385 = -t5*t71
    t386 = t0*t71
    t387 = t143 + t386
    t388 = t110*t231*t91 - t235*t64
    t389 = t371*t388
    t390 = -t3*t65
    t391 = t240*t285
    t392 = t0*t143 + t242
    t393 = t111*t240 + t243*t64
    t394 = t119*t120
    t395 = t277*t281
    t396 = t293 - t294
    t397 = 2*t2
    t398 = t397*t91
    t399 = t256*t3
    t400 = t111 - t399
    t401 = -2*t120*t53 + 2*t131
    t402 = t274*t281
    t403 = t138*t319
    t404 = t281*t295
    t405 = t120*t65 - t276
    t406 = t2*t91
    t407 = t157*t406
    t408 = t4*t91
    t409 = t137*t408
    t410 = t110*t2*t4
    t411 = t255*t410
    t412 = t120*t33
    t413 = -t34 + t35
    t414 = -t59 + t60
    t415 = t119*t12 + t414
    t416 = t120*t22
    t417 = t30 + t359
    t418 = t360 + t84
    t419 = t166 + t289 + t309*t406
    t420 = t120*t26
    t421 = t119*t16 + t420
    t422 = t26*t49
    t423 = t16*t53
    t424 = t422 - t423
    t425 = -t119*t16 + t420
    t426 = t188 + t337*t406 + t411
    t427 = t0*t351 + t3*t58 + t5*t58
    t428 = t120*t4
    t429 = t348 + t58
    t430 = t371*(t111*t194 + t197*t64)
    t431 = t139*t64
    t432 = t0*t120
    t433 = t205 - t206*t406
    t434 = t10*t101
    t435 = t261*(t4*t85 + t434) + t272*(t18*(t10*t85 - t101*t4) - t263*t99 + t352*t4)
    t436 = t201*t435
    t437 = t119*t2
    t438 = -t80 + t82
    t439 = t224*t406
    t440 = t371*(-t111*t224 + t228*t64)
    t441 = t0*t119
    t442 = -t231*t406 + t382
    t443 = t10*t102
    t444 = t261*(t0*t95 + t379) + t272*(t0*t443 - t102*t264 - t18*t230)
    t445 = t201*t444
    t446 = t240*t406
    t447 = t371*t393
    t448 = t295*t297
    t449 = 2*t4
    t450 = t157*t408
    t451 = t256*t5
    t452 = t111 - t451
    t453 = t274*t297
    t454 = t158*t319
    t455 = t119*t39
    t456 = -t140 + t141
    t457 = t326 + t416
    t458 = t170 + t309*t408
    t459 = -t50 + t51
    t460 = -t160 + t179 + t323*t408
    t461 = t337*t408
    t462 = t159*t64
    t463 = t206*t408
    t464 = t363*t371
    t465 = t214*t408 + t365
    t466 = t261*(t0*t99 + t353) + t272*(t0*t434 - t101*t262 - t213*t28)
    t467 = t201*t466
    t468 = t376 + t459
    t469 = t224*t408
    t470 = t239 + t240*t408
    t471 = t261*(t2*t84 + t443) + t272*(t2*t378 - t263*t95 + t28*(t10*t84 - t102*t2))
    t472 = t201*t471
    t473 = t12*t33
    t474 = t22*t39
    t475 = t113 + t172
    t476 = t12*t22
    t477 = -t476
    t478 = -t111
    t479 = -2*t311 + 2*t312 + t478
    t480 = -2*t314 + 2*t315
    t481 = t274*t310
    t482 = t319*t475
    t483 = t12*t26
    t484 = t16*t33
    t485 = t26*t39
    t486 = t16*t22
    t487 = t33*t39
    t488 = -t484
    t489 = t12*t2
    t490 = t39*t4
    t491 = 2*t59 + t61
    t492 = t39*t5
    t493 = t12*t3
    t494 = t2*t33
    t495 = t22*t4
    t496 = t22*t5
    t497 = 2*t140 + t142
    t498 = t3*t33
    t499 = t16*t26
    t500 = -t126 - t181
    t501 = -2*t422 + 2*t423
    t502 = t274*t324
    t503 = t319*t500
    t504 = t59 - 2*t60
    t505 = 2*t55 + t57
    t506 = t0*t16
    t507 = t1*t16
    t508 = t34 - 2*t35
    t509 = t0*t26
    t510 = t1*t26
    t511 = -t149 - t190
    t512 = t184*t274
    t513 = t40 - 2*t41
    t514 = t55 - 2*t56
    t515 = t140 - 2*t141
    t516 = -2*t33*t4 + t50
    t517 = 2*t9/t200**2
    t518 = t117*t319
    t519 = t427*t518
    t520 = t197*t63
    t521 = 2*t381
    t522 = t4*t64
    t523 = 2*t202
    t524 = 2*t472
    t525 = t206*t64
    t526 = 2*t445
    t527 = t0*t64
    val = arctan2(t63*t9, -t64)
    shape = np.broadcast(*[x0_0, x0_1, x0_2, x1_0, x1_1, x1_2, x2_0, x2_1, x2_2, x3_0, x3_1, x3_2]).shape
    g = np.empty(shape + (12,))
    g[..., 0] = t118*(t115 + t75)
    g[..., 1] = t118*(-t125 + t139*t64)
    g[..., 2] = t118*(-t148 + t159*t64)
    g[..., 3] = -t118*(t63*(t143*t39 + t162 + t33*t62) + t64*(t0*t63*t91 + t172 + t45))
    g[..., 4] = t118*(t176 - t183)
    g[..., 5] = t118*(t185 - t192)
    g[..., 6] = t199*t202
    g[..., 7] = -t202*t212
    g[..., 8] = -t202*t220
    g[..., 9] = t202*t229
    g[..., 10] = -t202*t236
    g[..., 11] = -t202*t244
    h = np.empty(shape + (12, 12))
    h[..., 0, 0] = t202*(2*t110*(t245 + t246) + 2*t201*t250*t273*t64 - t201*t273*t275 - t247 + t249*t74 - t250*t74 - t64*(-t252*t253 - t253*t254 - t258 - t259 - t260))
    h[..., 0, 1] = t202*(-t110*(t120*t65 + t276) + t137*t74 + 2*t201*t250*t291*t64 + t250*t281 - t275*t292 - t278 - t64*(t0*(-t120*t88 + t127*t67) + t2*(-t129*t65 + t71*t79) + t284 + t286 + t290 + t4*(t129*t88 - t246)))
    h[..., 1, 0] = h[..., 0, 1]
    h[..., 0, 2] = t202*(-t110*(t293 + t294) + t157*t74 + 2*t201*t250*t302*t64 + t250*t297 - t275*t303 - t296 - t64*(t0*(-t119*t79 + t150*t65) + t2*(t152*t79 - t245) - t252*t4 + t298 + t301))
    h[..., 2, 0] = h[..., 0, 2]
    h[..., 0, 3] = t202*(-t110*(t305 + t308) + t247 + t250*t310 - t275*t318 + t309*t74 + t318*t320 - t64*(t0*(-t12*t88 - t22*t79 + t46*t65 + t67*t81) + t134 + t155 + t249*t285 + t258 - t285*t309 + t313 + t316))
    h[..., 3, 0] = h[..., 0, 3]
    h[..., 0, 4] = t202*(-t110*(-t321 - t322 - t62) + t250*t324 - t275*t336 + t278 + t320*t336 + t323*t74 - t64*(-t0*(-t325 + t326 + t328) - t2*(t329 - t330 + t332) - t283 - t290 + t333*t4 - t334))
    h[..., 4, 0] = h[..., 0, 4]
    h[..., 0, 5] = t202*(-t110*(-t325 - t328 - t43) - t184*t250 + 2*t201*t250*t344*t64 - t275*t345 + t296 + t337*t74 - t64*(t0*(-t27*t79 + t321 + t342) - t2*t338 - t298 - t343 - t4*(t332 + t339 - t340)))
    h[..., 5, 0] = h[..., 0, 5]
    h[..., 0, 6] = t202*(t110*(t346 + t347) + t194*t74 - t197*t250 - t275*t355 + t320*t355 - t64*(t0*(-t28*t79 + t348) - t349 + t351))
    h[..., 6, 0] = h[..., 0, 6]
    h[..., 0, 7] = t118*(2*t114*t117*t363*t64 - t114*t362 + 2*t117*t363*t63*t74 - t206*t74 - t357*t63 - t64*(t0*(t10*t67 + t359) + t2*(t360 + t4*t79) - t216 + t358 + t361))
    h[..., 7, 0] = h[..., 0, 7]
    h[..., 0, 8] = t118*(-t114*t369 - t115*t372 + t366*t74 - t372*t75 - t63*(t367 + t43) + t64*(-t0*t357 - t207 + t214*t285 + t368 + t4*(-t331 - t348)))
    h[..., 8, 0] = h[..., 0, 8]
    h[..., 0, 9] = t202*(t110*(t373 + t374) + 2*t201*t250*t380*t64 - t224*t74 - t228*t250 - t275*t381 - t64*(-t0*(t375 - t376) - t223 + t377))
    h[..., 9, 0] = h[..., 0, 9]
    h[..., 0, 10] = t118*(-t114*t235 - t115*t389 + t383*t74 - t389*t75 - t63*(t37 + t384) + t64*(-t0*t387 + t2*(-t376 - t53) + t231*t285 - t241 + t385))
    h[..., 10, 0] = h[..., 0, 10]
    h[..., 0, 11] = t118*(2*t114*t117*t393*t64 - t114*t392 + 2*t117*t393*t63*t74 - t240*t74 - t387*t63 - t64*(t0*(t10*t65 - t92 + t93) - t232 + t390 + t391 + t4*(t2*t88 + t84)))
    h[..., 11, 0] = h[..., 0, 11]
    h[..., 1, 1] = t202*(-t137*t281 + t138*t281 + t274*(t246 + t394) + t292*t402 + t292*t403 + t395 - t64*(-t137*t398 - t259 - t396*t397 - t400 - t401))
    h[..., 1, 2] = t202*(-t110*(t251 + t69*t71) + t138*t297 - t157*t281 + t303*t402 + t303*t403 + t404 - t64*(t0*(t127*t150 - t394) - t2*t405 - t396*t4 - t407 - t409 + t411 + t66 + t68 - t73))
    h[..., 2, 1] = h[..., 1, 2]
    h[..., 1, 3] = t202*(2*t110*t201*t281*t317 - t110*(-t412 - t413 - t415) - t112*t281 + 2*t138*t201*t317*t64 + t138*t310 - t281*t309 - t64*(t0*(t127*t46 - t416 + t417) + t2*(-t129*t81 + t340 + t418) - t282 - t286 - t333*t4 - t419))
    h[..., 3, 1] = h[..., 1, 3]
    h[..., 1, 4] = t202*(2*t110*t201*t281*t335 - t110*(t305 + t421) + 2*t138*t201*t335*t64 + t138*t324 - t281*t323 - t395 - t64*(t135 + t137*t406 + t2*(t120*t23 - t127*t39 - t129*t26 + t17*t71) + t313 - t323*t406 + t400 + t424))
    h[..., 4, 1] = h[..., 1, 4]
    h[..., 1, 5] = t202*(2*t110*t201*t281*t344 - t110*(-t339 - t340 - t53 - t58) - t138*t184 + 2*t138*t201*t344*t64 - t281*t337 - t404 - t64*(t0*t425 + t2*(-t127*t13 + t342 + t412) + t4*(t129*t27 - t327 + t417) + t409 - t426 - t68 + t72))
    h[..., 5, 1] = h[..., 1, 5]
    h[..., 1, 6] = t118*(-t124*t427 + t125*t430 + t139*t197 - t430*t431 - t63*(t120*t2 + t414) + t64*(t0*(-t428 - t43) + t194*t406 - t2*t429 - t217 + t358))
    h[..., 6, 1] = h[..., 1, 6]
    h[..., 1, 7] = t202*(t110*(t347 + t432) + t138*t210 + t206*t281 + t402*t436 + t403*t436 - t64*(-t2*(t367 - t428) - t433))
    h[..., 7, 1] = h[..., 1, 7]
    h[..., 1, 8] = t118*(2*t117*t124*t370*t63 - t124*t366 - t139*t369 - t372*t431 - t429*t63 + t64*(t1*t120 - t195 + t2*t214*t91 - t2*(t120*t18 + t20) - t4*(t0*t129 + t99)))
    h[..., 8, 1] = h[..., 1, 8]
    h[..., 1, 9] = t118*(t124*t224 + t125*t440 + t139*t228 - t431*t440 - t63*(t413 + t437) - t64*(t0*(t127*t4 - t24 + t29) + t2*(t18*t71 + t438) - t242 + t385 + t439))
    h[..., 9, 1] = h[..., 1, 9]
    h[..., 1, 10] = t202*(t110*(t374 + t441) + t138*t235 - t231*t281 + t402*t445 + t403*t445 - t64*(t2*(-t127*t28 + t386) + t442))
    h[..., 10, 1] = h[..., 1, 10]
    h[..., 1, 11] = t118*(2*t117*t139*t393*t64 + t124*t240 - t125*t447 - t139*t392 - t63*(t375 + t53) + t64*(t127*t263 - t18*(t127*t2 + t95) + t2*t95 - t28*(t10*t71 + t30) - t446))
    h[..., 11, 1] = h[..., 1, 11]
    h[..., 2, 2] = t202*(-t157*t297 + t158*t297 + t274*(t245 + t394) + t303*t453 + t303*t454 + t448 - t64*(-t260 - t401 - t405*t449 - 2*t450 - t452))
    h[..., 2, 3] = t202*(2*t110*t201*t297*t317 - t110*(-t455 - t456 - t457) - t112*t297 + 2*t158*t201*t317*t64 + t158*t310 - t297*t309 - t64*(-t0*(t37 - t412 + t415) + t2*t338 - t301 + t4*(-t152*t46 + t330 + t418) - t458))
    h[..., 3, 2] = h[..., 2, 3]
    h[..., 2, 4] = t202*(2*t110*t201*t297*t335 - t110*(-t329 - t330 - t331 - t459) + 2*t158*t201*t335*t64 + t158*t324 - t277*t297 - t297*t323 - t64*(-t0*t425 - t2*(-t321 + t322 + t414) - t4*(t143 - t455 + t457) + t407 - t411 - t460 - t66 + t70))
    h[..., 4, 2] = h[..., 2, 4]
    h[..., 2, 5] = t202*(2*t110*t201*t297*t344 - t110*(t308 + t421) - t158*t184 + 2*t158*t201*t344*t64 - t297*t337 - t448 - t64*(t156 + t316 + t4*(t119*t13 - t150*t33 - t152*t16 + t27*t69) + t424 + t450 + t452 - t461))
    h[..., 5, 2] = h[..., 2, 5]
    h[..., 2, 6] = t118*(-t147*t427 + t148*t430 + t159*t197 - t430*t462 - t63*(t326 + t428) + t64*(-t0*(t150*t2 + t341) + t194*t4*t91 - t208 - t368 - t4*(t28*t69 + t49)))
    h[..., 6, 2] = h[..., 2, 6]
    h[..., 2, 7] = t118*(2*t117*t159*t363*t64 + t147*t206 - t148*t464 - t159*t362 - t63*(t331 + t4*t69) + t64*(t150*t263 - t18*(t10*t69 + t20) - t28*(t150*t4 + t99) + t4*t99 - t463))
    h[..., 7, 2] = h[..., 2, 7]
    h[..., 2, 8] = t202*(t110*(t346 + t432) + t158*t218 - t214*t297 + t453*t467 + t454*t467 - t64*(t4*(-t150*t18 + t356) - t465))
    h[..., 8, 2] = h[..., 2, 8]
    h[..., 2, 9] = t118*(t147*t224 + t148*t440 + t159*t228 - t440*t462 - t63*(t119*t4 + t456) - t64*(-t0*(-t37 - t437) - t233 - t390 + t4*t468 + t469))
    h[..., 9, 2] = h[..., 2, 9]
    h[..., 2, 10] = t118*(2*t117*t147*t388*t63 - t147*t383 - t159*t235 - t389*t462 - t468*t63 + t64*(t1*t119 - t2*(t0*t152 + t95) - t227 + t231*t4*t91 - t4*(t119*t28 + t30)))
    h[..., 10, 2] = h[..., 2, 10]
    h[..., 2, 11] = t202*(t110*(t373 + t441) + t158*t243 + t240*t297 + t453*t472 + t454*t472 - t64*(-t4*(t384 - t437) + t470))
    h[..., 11, 2] = h[..., 2, 11]
    h[..., 3, 3] = t202*(-t112*t310 + t274*(t473 + t474) - t309*t310 + t310*t475 + t318*t481 + t318*t482 - t64*(t253*t309*t91 + t253*(t46*t81 + t477) + t257 + t479 + t480))
    h[..., 3, 4] = t202*(2*t110*t201*t310*t335 - t110*(t483 + t484) + 2*t201*t335*t475*t64 - t277*t310 - t310*t323 + t324*t475 - t64*(-t0*(t485 - t486) - t2*(-t477 - t487) + t334 + t419))
    h[..., 4, 3] = h[..., 3, 4]
    h[..., 3, 5] = t202*(2*t110*t201*t310*t344 - t110*(t485 + t486) - t184*t475 + 2*t201*t344*t475*t64 - t295*t310 - t310*t337 - t64*(-t0*(-t483 - t488) + t343 + t4*(t13*t22 - t33*t46) + t458))
    h[..., 5, 3] = h[..., 3, 5]
    h[..., 3, 6] = t202*(2*t110*t201*t310*t354 - t110*(t489 + t490) - t194*t310 - t197*t475 + 2*t201*t354*t475*t64 - t64*(t0*(-t12*t28 + t2*t46) + t204 + t349 + t364))
    h[..., 6, 3] = h[..., 3, 6]
    h[..., 3, 7] = t202*(t110*t491 + t206*t310 + t210*t475 + t436*t481 + t436*t482 - t64*(t0*(2*t96 + t98) + t2*(t49 + t56) + t216 - t361 + t492))
    h[..., 7, 3] = h[..., 3, 7]
    h[..., 3, 8] = t202*(2*t110*t201*t310*t466 - t110*(-2*t40 - t42) + 2*t201*t466*t475*t64 - t214*t310 + t218*t475 - t64*(t0*t214*t91 - t0*t491 - t12*t5 - t207 - t493))
    h[..., 8, 3] = h[..., 3, 8]
    h[..., 3, 9] = t202*(2*t110*t201*t310*t380 - t110*(t494 + t495) + 2*t201*t380*t475*t64 + t224*t310 - t228*t475 - t64*(t0*t53 - t222 - t238 - t377))
    h[..., 9, 3] = h[..., 3, 9]
    h[..., 3, 10] = t202*(2*t110*t201*t310*t444 - t110*(-2*t34 - t36) + 2*t201*t444*t475*t64 - t231*t310 + t235*t475 - t64*(t0*t231*t91 - t0*t497 - t22*t3 - t241 - t496))
    h[..., 10, 3] = h[..., 3, 10]
    h[..., 3, 11] = t202*(t110*t497 + t240*t310 + t243*t475 + t472*t481 + t472*t482 - t64*(t0*(2*t92 + t94) + t232 - t391 + t4*(t438 + t50) + t498))
    h[..., 11, 3] = h[..., 3, 11]
    h[..., 4, 4] = t202*(t274*(t474 + t499) - t277*t324 - t323*t324 + t324*t500 + t336*t502 + t336*t503 - t64*(t323*t398 + t397*(t17*t23 - t485) + t399 + t479 + t501))
    h[..., 4, 5] = t202*(2*t110*t201*t324*t344 - t110*(t476 + t487) - t184*t500 + 2*t201*t344*t500*t64 - t295*t324 - t324*t337 - t64*(t2*(-t13*t26 + t17*t33) + t4*(-t16*t23 + t27*t39) + t426 + t460))
    h[..., 5, 4] = h[..., 4, 5]
    h[..., 4, 6] = t202*(2*t110*t201*t324*t354 - t110*t504 - t194*t324 - t197*t500 + 2*t201*t354*t500*t64 - t64*(-t1*t39 + t194*t2*t91 - t2*t505 - t217 - t492))
    h[..., 6, 4] = h[..., 4, 6]
    h[..., 4, 7] = t202*(-t110*(t490 + t506) + t206*t324 + t210*t500 + t436*t502 + t436*t503 - t64*(t2*t43 + t433))
    h[..., 7, 4] = h[..., 4, 7]
    h[..., 4, 8] = t118*(t175*t366 - t176*t372 + t182*t369 + t183*t372 + t505*t63 - t64*(t16*t5 - t2*t504 - t2*t62 + t366*t406 + t507))
    h[..., 8, 4] = h[..., 4, 8]
    h[..., 4, 9] = t202*(2*t110*t201*t324*t380 - t110*t508 + 2*t201*t380*t500*t64 + t224*t324 - t228*t500 - t64*(t0*(t141 + t30) + t2*(2*t80 + t83) + t242 - t439 + t496))
    h[..., 9, 4] = h[..., 4, 9]
    h[..., 4, 10] = t202*(2*t110*t201*t324*t444 - t110*(t495 + t509) + 2*t201*t444*t500*t64 - t231*t324 + t235*t500 - t64*(t2*(t0*t23 - t26*t28) - t442))
    h[..., 10, 4] = h[..., 4, 10]
    h[..., 4, 11] = t118*(-t175*t240 + t176*t447 + t182*t392 - t183*t447 + t63*(2*t50 + t52) + t64*(-t2*t508 - t226 + t26*t5 + t446 + t510))
    h[..., 11, 4] = h[..., 4, 11]
    h[..., 5, 5] = t202*(t184*t295 + t184*t337 - t184*t511 + t274*(t473 + t499) + t319*t345*t511 - t345*t512 - t64*(t449*(t13*t27 + t488) + t451 + 2*t461 + t478 + t480 + t501))
    h[..., 5, 6] = t202*(-t110*t513 + t184*t194 - t197*t511 + 2*t201*t354*t511*t64 - t355*t512 - t64*(t0*(t20 + t60) + t194*t408 + t209 - t4*t514 + t493))
    h[..., 6, 5] = h[..., 5, 6]
    h[..., 5, 7] = t118*(-t184*t206 + t185*t464 + t191*t362 - t192*t464 - t514*t63 + t64*(t16*t3 - t196 - t4*t513 + t463 + t507))
    h[..., 7, 5] = h[..., 5, 7]
    h[..., 5, 8] = t202*(-t110*(t489 + t506) + t184*t214 + 2*t201*t466*t511*t64 + t218*t511 - t467*t512 - t64*(t4*(t0*t13 - t16*t18) + t465))
    h[..., 8, 5] = h[..., 5, 8]
    h[..., 5, 9] = t202*(-t110*t515 - t184*t224 + 2*t201*t380*t511*t64 - t228*t511 - t381*t512 - t64*(-t1*t33 - t234 + t4*t516 - t469 - t498))
    h[..., 9, 5] = h[..., 5, 9]
    h[..., 5, 10] = t118*(t184*t383 - t185*t389 + t191*t235 + t192*t389 - t516*t63 - t64*(-t143*t4 + t26*t3 + t383*t408 - t4*t515 + t510))
    h[..., 10, 5] = h[..., 5, 10]
    h[..., 5, 11] = t202*(-t110*(t494 + t509) - t184*t240 + 2*t201*t471*t511*t64 + t243*t511 - t472*t512 - t64*(t37*t4 - t470))
    h[..., 11, 5] = h[..., 5, 11]
    h[..., 6, 6] = -t199*t354*t517
    h[..., 6, 7] = t118*(-t197*t206 + t362*t427 - t363*t519 + t464*t520)
    h[..., 7, 6] = h[..., 6, 7]
    h[..., 6, 8] = t118*(t197*t366 + t369*t427 + t370*t519 - t372*t520)
    h[..., 8, 6] = h[..., 6, 8]
    h[..., 6, 9] = t202*(t110*t6 + 2*t194*t201*t380*t64 - t194*t228 - t197*t224 - t198*t521)
    h[..., 9, 6] = h[..., 6, 9]
    h[..., 6, 10] = t201*(2*t194*t201*t444*t64*t9 + t194*t235*t9 + t197*t231*t9 - t198*t444*t523 - t288*t9 - t522*t8)
    h[..., 10, 6] = h[..., 6, 10]
    h[..., 6, 11] = t202*(2*t194*t201*t471*t64 + t194*t243 - t197*t240 - t198*t524 + t2*t64*(-t18*t2 + t265) - t299)
    h[..., 11, 6] = h[..., 6, 11]
    h[..., 7, 7] = t212*t435*t517
    h[..., 7, 8] = t202*(2*t110*t201*t210*t466 - t206*t218 - t210*t214 - 2*t467*t525)
    h[..., 8, 7] = h[..., 7, 8]
    h[..., 7, 9] = t202*(t206*t228 + t210*t224 + t211*t521 - t288 - t521*t525 + t522*(t262 + t263 - t28*t4))
    h[..., 9, 7] = h[..., 7, 9]
    h[..., 7, 10] = t202*(2*t110*t201*t210*t444 + t110*(t1 + t5) - t206*t235 - t210*t231 - t525*t526)
    h[..., 10, 7] = h[..., 7, 10]
    h[..., 7, 11] = t201*(2*t110*t201*t210*t471*t9 - t206*t243*t9 + t210*t240*t9 - t410*t9 - t471*t523*t525 - t527*t8)
    h[..., 11, 7] = h[..., 7, 11]
    h[..., 8, 8] = t220*t466*t517
    h[..., 8, 9] = t201*(2*t110*t201*t218*t380*t9 - t2*t64*t8 + 2*t201*t214*t380*t64*t9 - t214*t228*t9 + t218*t224*t9 - t299*t9)
    h[..., 9, 8] = h[..., 8, 9]
    h[..., 8, 10] = t202*(t214*t235 + t215*t526 - t218*t231 + t219*t526 - t410 + t527*(-t0*t10 + t262 + t264))
    h[..., 10, 8] = h[..., 8, 10]
    h[..., 8, 11] = t202*(t110*(t1 + t3) + t214*t243 + t215*t524 + t218*t240 + t219*t524)
    h[..., 11, 8] = h[..., 8, 11]
    h[..., 9, 9] = -t229*t380*t517
    h[..., 9, 10] = t118*(-t224*t235 - t225*t389 + t228*t383 - t228*t389*t63)
    h[..., 10, 9] = h[..., 9, 10]
    h[..., 9, 11] = t118*(2*t117*t224*t393*t64 + 2*t117*t228*t393*t63 - t224*t392 - t228*t240)
    h[..., 11, 9] = h[..., 9, 11]
    h[..., 10, 10] = t236*t444*t517
    h[..., 10, 11] = t118*(t235*t240 - t235*t447*t63 + t383*t392 - t383*t393*t518)
    h[..., 11, 10] = h[..., 10, 11]
    h[..., 11, 11] = t244*t471*t517
    return val + np.zeros(shape), g, h
