"""Generated by tools/gen_derivatives.py. Do not edit."""
import numpy as np
from numpy import sqrt, arctan2


def pp_d2(p, q):
    """Squared point-point distance with gradient and Hessian."""
    p_0 = p[..., 0]
    p_1 = p[..., 1]
    p_2 = p[..., 2]
    q_0 = q[..., 0]
    q_1 = q[..., 1]
    q_2 = q[..., 2]
    t0 = p_0 - q_0
    t1 = p_1 - q_1
    t2 = p_2 - q_2
    val = t0**2 + t1**2 + t2**2
    shape = np.broadcast(*[p_0, p_1, p_2, q_0, q_1, q_2]).shape
    g = np.empty(shape + (6,))
    g[..., 0] = 2*t0
    g[..., 1] = 2*t1
    g[..., 2] = 2*t2
    g[..., 3] = -2*t0
    g[..., 4] = -2*t1
    g[..., 5] = -2*t2
    h = np.empty(shape + (6, 6))
    h[..., 0, 0] = 2
    h[..., 0, 1] = 0
    h[..., 1, 0] = h[..., 0, 1]
    h[..., 0, 2] = 0
    h[..., 2, 0] = h[..., 0, 2]
    h[..., 0, 3] = -2
    h[..., 3, 0] = h[..., 0, 3]
    h[..., 0, 4] = 0
    h[..., 4, 0] = h[..., 0, 4]
    h[..., 0, 5] = 0
    h[..., 5, 0] = h[..., 0, 5]
    h[..., 1, 1] = 2
    h[..., 1, 2] = 0
    h[..., 2, 1] = h[..., 1, 2]
    h[..., 1, 3] = 0
    h[..., 3, 1] = h[..., 1, 3]
    h[..., 1, 4] = -2
    h[..., 4, 1] = h[..., 1, 4]
    h[..., 1, 5] = 0
    h[..., 5, 1] = h[..., 1, 5]
    h[..., 2, 2] = 2
    h[..., 2, 3] = 0
    h[..., 3, 2] = h[..., 2, 3]
    h[..., 2, 4] = 0
    h[..., 4, 2] = h[..., 2, 4]
    h[..., 2, 5] = -2
    h[..., 5, 2] = h[..., 2, 5]
    h[..., 3, 3] = 2
    h[..., 3, 4] = 0
    h[..., 4, 3] = h[..., 3, 4]
    h[..., 3, 5] = 0
    h[..., 5, 3] = h[..., 3, 5]
    h[..., 4, 4] = 2
    h[..., 4, 5] = 0
    h[..., 5, 4] = h[..., 4, 5]
    h[..., 5, 5] = 2
    return val + np.zeros(shape), g, h


def pe_d2(p, e0, e1):
    """Squared point-line distance with gradient and Hessian."""
    p_0 = p[..., 0]
    p_1 = p[..., 1]
    p_2 = p[..., 2]
    e0_0 = e0[..., 0]
    e0_1 = e0[..., 1]
    e0_2 = e0[..., 2]
    e1_0 = e1[..., 0]
    e1_1 = e1[..., 1]
    e1_2 = e1[..., 2]
    t0 = e0_0 - e1_0
    t1 = t0**2
    t2 = e0_1 - e1_1
    t3 = t2**2
    t4 = e0_2 - e1_2
    t5 = t4**2
    t6 = t3 + t5
    t7 = t1 + t6
    t8 = t7**(-1.0)
    t9 = -p_0
    t10 = e0_0 + t9
    t11 = -p_1
    t12 = e1_1 + t11
    t13 = t10*t12
    t14 = e0_1 + t11
    t15 = e1_0 + t9
    t16 = t14*t15
    t17 = t13 - t16
    t18 = -p_2
    t19 = e1_2 + t18
    t20 = t10*t19
    t21 = e0_2 + t18
    t22 = t15*t21
    t23 = t20 - t22
    t24 = t14*t19
    t25 = t12*t21
    t26 = t24 - t25
    t27 = t17**2 + t23**2 + t26**2
    t28 = t27*t8
    t29 = 2*t8
    t30 = t29*(t17*t2 + t23*t4)
    t31 = t0*t17 - t26*t4
    t32 = t29*t31
    t33 = t29*(t0*t23 + t2*t26)
    t34 = -t0*t28
    t35 = t12*t17 + t19*t23
    t36 = t2*t28
    t37 = t15*t17 - t19*t26
    t38 = t28*t4
    t39 = t12*t26 + t15*t23
    t40 = t14*t17 + t21*t23
    t41 = t10*t17 - t21*t26
    t42 = t10*t23 + t14*t26
    t43 = t0*t29
    t44 = t12*t2
    t45 = t19*t4
    t46 = -t0*t30
    t47 = -t13 + t16 + t2*t30
    t48 = -t20 + t22 + t30*t4
    t49 = t14*t2
    t50 = t21*t4
    t51 = t2*t29
    t52 = -t31
    t53 = t0*t15
    t54 = t29*t4
    t55 = -t24 + t25
    t56 = t0*t10
    t57 = -t0*t33 + t23
    t58 = -t2*t33 + t26
    t59 = t33*t4
    t60 = t12**2
    t61 = 4*t8
    t62 = t0*t61
    t63 = 4*t27/t7**2
    t64 = t1*t63
    t65 = -t28
    t66 = t19**2 + t65
    t67 = t35*t51
    t68 = -t37
    t69 = t0*t63
    t70 = t2*t69
    t71 = t39*t43
    t72 = t4*t69
    t73 = -t35*t54 + t72
    t74 = t12*t14
    t75 = t19*t21 + t65
    t76 = t41*t43 + t70
    t77 = t42*t43
    t78 = t15**2
    t79 = t3*t63
    t80 = t2*t61
    t81 = t39*t51
    t82 = t2*t4*t63
    t83 = -t54*t68 + t82
    t84 = -t40*t51
    t85 = t10*t15
    t86 = t42*t51
    t87 = t4*t61
    t88 = t5*t63 + t65
    t89 = -t40*t54 + t72
    t90 = t41*t54 + t82
    t91 = t14**2
    t92 = t21**2 + t65
    t93 = t10**2
    val = t28
    shape = np.broadcast(*[p_0, p_1, p_2, e0_0, e0_1, e0_2, e1_0, e1_1, e1_2]).shape
    g = np.empty(shape + (9,))
    g[..., 0] = t30
    g[..., 1] = -t32
    g[..., 2] = -t33
    g[..., 3] = t29*(t34 + t35)
    g[..., 4] = t29*(-t36 - t37)
    g[..., 5] = -t29*(t38 + t39)
    g[..., 6] = t29*(-t34 - t40)
    g[..., 7] = t29*(t36 + t41)
    g[..., 8] = t29*(t38 + t42)
    h = np.empty(shape + (9, 9))
    h[..., 0, 0] = t29*t6
    h[..., 0, 1] = -t2*t43
    h[..., 1, 0] = h[..., 0, 1]
    h[..., 0, 2] = -t4*t43
    h[..., 2, 0] = h[..., 0, 2]
    h[..., 0, 3] = t29*(t44 + t45 + t46)
    h[..., 3, 0] = h[..., 0, 3]
    h[..., 0, 4] = t29*(-t15*t2 - t47)
    h[..., 4, 0] = h[..., 0, 4]
    h[..., 0, 5] = t29*(-t15*t4 - t48)
    h[..., 5, 0] = h[..., 0, 5]
    h[..., 0, 6] = t29*(-t46 - t49 - t50)
    h[..., 6, 0] = h[..., 0, 6]
    h[..., 0, 7] = t29*(t10*t2 + t47)
    h[..., 7, 0] = h[..., 0, 7]
    h[..., 0, 8] = t29*(t10*t4 + t48)
    h[..., 8, 0] = h[..., 0, 8]
    h[..., 1, 1] = t29*(t1 + t5)
    h[..., 1, 2] = -t4*t51
    h[..., 2, 1] = h[..., 1, 2]
    h[..., 1, 3] = t29*(-t0*t12 - t17 - t43*t52)
    h[..., 3, 1] = h[..., 1, 3]
    h[..., 1, 4] = t29*(t45 - t51*t52 + t53)
    h[..., 4, 1] = h[..., 1, 4]
    h[..., 1, 5] = t29*(-t12*t4 - t52*t54 - t55)
    h[..., 5, 1] = h[..., 1, 5]
    h[..., 1, 6] = t29*(t0*t14 - t0*t32 + t17)
    h[..., 6, 1] = h[..., 1, 6]
    h[..., 1, 7] = -t29*(t2*t32 + t50 + t56)
    h[..., 7, 1] = h[..., 1, 7]
    h[..., 1, 8] = t29*(t14*t4 - t32*t4 + t55)
    h[..., 8, 1] = h[..., 1, 8]
    h[..., 2, 2] = t29*(t1 + t3)
    h[..., 2, 3] = t29*(-t0*t19 - t57)
    h[..., 3, 2] = h[..., 2, 3]
    h[..., 2, 4] = t29*(-t19*t2 - t58)
    h[..., 4, 2] = h[..., 2, 4]
    h[..., 2, 5] = t29*(t44 + t53 + t59)
    h[..., 5, 2] = h[..., 2, 5]
    h[..., 2, 6] = t29*(t0*t21 + t57)
    h[..., 6, 2] = h[..., 2, 6]
    h[..., 2, 7] = t29*(t2*t21 + t58)
    h[..., 7, 2] = h[..., 2, 7]
    h[..., 2, 8] = -t29*(t49 + t56 + t59)
    h[..., 8, 2] = h[..., 2, 8]
    h[..., 3, 3] = t29*(-t35*t62 + t60 + t64 + t66)
    h[..., 3, 4] = t29*(-t12*t15 - t43*t68 - t67 + t70)
    h[..., 4, 3] = h[..., 3, 4]
    h[..., 3, 5] = t29*(-t15*t19 + t71 + t73)
    h[..., 5, 3] = h[..., 3, 5]
    h[..., 3, 6] = t29*(2*t0*t35*t8 + 2*t0*t40*t8 - t64 - t74 - t75)
    h[..., 6, 3] = h[..., 3, 6]
    h[..., 3, 7] = t29*(2*t10*t12 - t16 + t67 - t76)
    h[..., 7, 3] = h[..., 3, 7]
    h[..., 3, 8] = t29*(2*t10*t19 - t22 - t73 - t77)
    h[..., 8, 3] = h[..., 3, 8]
    h[..., 4, 4] = t29*(t37*t80 + t66 + t78 + t79)
    h[..., 4, 5] = t29*(-t12*t19 + t81 + t83)
    h[..., 5, 4] = h[..., 4, 5]
    h[..., 4, 6] = t29*(-t13 + 2*t14*t15 - t37*t43 - t70 - t84)
    h[..., 6, 4] = h[..., 4, 6]
    h[..., 4, 7] = t29*(-t37*t51 - t41*t51 - t75 - t79 - t85)
    h[..., 7, 4] = h[..., 4, 7]
    h[..., 4, 8] = t29*(2*t14*t19 - t25 - t83 - t86)
    h[..., 8, 4] = h[..., 4, 8]
    h[..., 5, 5] = t29*(t39*t87 + t60 + t78 + t88)
    h[..., 5, 6] = t29*(2*t15*t21 - t20 - t71 - t89)
    h[..., 6, 5] = h[..., 5, 6]
    h[..., 5, 7] = t29*(2*t12*t21 - t24 - t81 - t90)
    h[..., 7, 5] = h[..., 5, 7]
    h[..., 5, 8] = t29*(-t39*t54 - t42*t54 - t74 - t85 - t88)
    h[..., 8, 5] = h[..., 5, 8]
    h[..., 6, 6] = t29*(-t40*t62 + t64 + t91 + t92)
    h[..., 6, 7] = t29*(-t10*t14 + t76 + t84)
    h[..., 7, 6] = h[..., 6, 7]
    h[..., 6, 8] = t29*(-t10*t21 + t77 + t89)
    h[..., 8, 6] = h[..., 6, 8]
    h[..., 7, 7] = t29*(t41*t80 + t79 + t92 + t93)
    h[..., 7, 8] = t29*(-t14*t21 + t86 + t90)
    h[..., 8, 7] = h[..., 7, 8]
    h[..., 8, 8] = t29*(t42*t87 + t88 + t91 + t93)
    return val + np.zeros(shape), g, h


def pt_d2(p, t0, t1, t2):
    """Squared point-plane distance with gradient and Hessian."""
    p_0 = p[..., 0]
    p_1 = p[..., 1]
    p_2 = p[..., 2]
    t0_0 = t0[..., 0]
    t0_1 = t0[..., 1]
    t0_2 = t0[..., 2]
    t1_0 = t1[..., 0]
    t1_1 = t1[..., 1]
    t1_2 = t1[..., 2]
    t2_0 = t2[..., 0]
    t2_1 = t2[..., 1]
    t2_2 = t2[..., 2]
    t0 = -t1_0
    t1 = t0 + t0_0
    t2 = -t2_2
    t3 = t0_2 + t2
    t4 = t1*t3
    t5 = -t2_0
    t6 = t0_0 + t5
    t7 = -t1_2
    t8 = t0_2 + t7
    t9 = t6*t8
    t10 = t4 - t9
    t11 = t10**2
    t12 = -t2_1
    t13 = t0_1 + t12
    t14 = t1*t13
    t15 = -t1_1
    t16 = t0_1 + t15
    t17 = t16*t6
    t18 = -t17
    t19 = t14 + t18
    t20 = t19**2
    t21 = t16*t3
    t22 = t13*t8
    t23 = -t22
    t24 = t21 + t23
    t25 = t24**2
    t26 = t20 + t25
    t27 = t11 + t26
    t28 = t27**(-1.0)
    t29 = p_1 - t0_1
    t30 = p_0 - t0_0
    t31 = p_2 - t0_2
    t32 = t19*t31 + t24*t30
    t33 = -t10*t29 + t32
    t34 = t33**2
    t35 = t28*t34
    t36 = t28*t33
    t37 = 2*t36
    t38 = t24*t37
    t39 = t10*t37
    t40 = t19*t37
    t41 = t12 + t1_1
    t42 = -t1
    t43 = -t13
    t44 = t42*t43
    t45 = -t6
    t46 = -t16
    t47 = t45*t46
    t48 = t44 - t47
    t49 = t1_2 + t2
    t50 = -t49
    t51 = -t3
    t52 = -t8
    t53 = t42*t51 - t45*t52
    t54 = -t53
    t55 = t41*t48 + t50*t54
    t56 = -t29*t53 + t32
    t57 = t26 + t53**2
    t58 = t57**(-1.0)
    t59 = t56*t58
    t60 = t55*t59
    t61 = t24 + t29*t49 - t31*t41
    t62 = 2*t59
    t63 = t1_0 + t5
    t64 = -t63
    t65 = t46*t51
    t66 = t43*t52
    t67 = t65 - t66
    t68 = t48*t64 + t49*t67
    t69 = t59*t68
    t70 = t31*t63
    t71 = t30*t49
    t72 = -t4 + t9
    t73 = t70 - t71 + t72
    t74 = -t41
    t75 = t54*t63 + t67*t74
    t76 = t59*t75
    t77 = t19 - t29*t63 + t30*t41
    t78 = t13*t19 + t3*t53
    t79 = t36*t78
    t80 = -t13*t31 + t29*t3
    t81 = t19*t6 - t24*t3
    t82 = t36*t81
    t83 = t3*t30 - t31*t6
    t84 = t13*t24 + t53*t6
    t85 = t36*t84
    t86 = t29*t6
    t87 = -t13*t30 + t86
    t88 = t16*t19 + t53*t8
    t89 = t36*t88
    t90 = -t16*t31 + t29*t8
    t91 = -t1*t19 + t24*t8
    t92 = t36*t91
    t93 = t1*t31
    t94 = t30*t8
    t95 = t93 - t94
    t96 = t1*t53 + t16*t24
    t97 = t36*t96
    t98 = t16*t30
    t99 = t1*t29 - t98
    t100 = 2*t28
    t101 = t100*t24
    t102 = 2*t60
    t103 = 2*t58
    t104 = t10 - t70 + t71
    t105 = -t19*t63 + t24*t49
    t106 = -t77
    t107 = 2*t76
    t108 = 2*t79
    t109 = -t83
    t110 = t48*t6 + t51*t67
    t111 = t110*t62
    t112 = t13*t30 - t86
    t113 = 2*t85
    t114 = 2*t89
    t115 = -t93 + t94
    t116 = 2*t92
    t117 = -t1*t29 + t98
    t118 = -t117
    t119 = t1*t54 + t46*t67
    t120 = t119*t62
    t121 = t10*t100
    t122 = -t61
    t123 = t105*t37
    t124 = t24*t41 + t53*t63
    t125 = t103*t53
    t126 = t13*t67 + t45*t54
    t127 = -t90
    t128 = t16*t48 + t52*t54
    t129 = t42*t48 + t67*t8
    t130 = t129*t62
    t131 = 2*t97
    t132 = t19*t41 + t49*t53
    t133 = 2*t19
    t134 = t3*t54 + t43*t48
    t135 = t134*t62
    t136 = t100*t19
    t137 = t56**2
    t138 = t137*t58
    t139 = t57**(-2.0)
    t140 = 4*t137*t139
    t141 = t35*t63
    t142 = t132*t37
    t143 = 4*t34/t27**2
    t144 = t132*t143
    t145 = t124*t37
    t146 = p_2 + t2
    t147 = 2*t82
    t148 = p_1 + t12
    t149 = t122*t62
    t150 = p_2 + t7
    t151 = -t44 + t47
    t152 = p_1 + t15
    t153 = t105*t143
    t154 = 2*t69
    t155 = p_0 + t5
    t156 = p_0 + t0
    t157 = -t65 + t66
    t158 = t124*t143
    t159 = t106*t62
    t160 = t13**2
    t161 = t3**2
    t162 = t143*t78
    t163 = t128*t62
    t164 = t6**2
    t165 = t143*t81
    t166 = t143*t88
    t167 = t126*t62
    t168 = t16**2
    t169 = t8**2
    t170 = t1*t35
    t171 = t1**2
    val = t35
    shape = np.broadcast(*[p_0, p_1, p_2, t0_0, t0_1, t0_2, t1_0, t1_1, t1_2, t2_0, t2_1, t2_2]).shape
    g = np.empty(shape + (12,))
    g[..., 0] = t38
    g[..., 1] = -t39
    g[..., 2] = t40
    g[..., 3] = t62*(-t60 - t61)
    g[..., 4] = t62*(-t69 - t73)
    g[..., 5] = t62*(-t76 - t77)
    g[..., 6] = t37*(t79 + t80)
    g[..., 7] = -t37*(t82 + t83)
    g[..., 8] = t37*(-t85 - t87)
    g[..., 9] = -t37*(t89 + t90)
    g[..., 10] = t37*(-t92 - t95)
    g[..., 11] = t37*(t97 + t99)
    h = np.empty(shape + (12, 12))
    h[..., 0, 0] = t100*t25
    h[..., 0, 1] = -t10*t101
    h[..., 1, 0] = h[..., 0, 1]
    h[..., 0, 2] = t101*t19
    h[..., 2, 0] = h[..., 0, 2]
    h[..., 0, 3] = t103*t24*(-t102 - t61)
    h[..., 3, 0] = h[..., 0, 3]
    h[..., 0, 4] = t100*(t104*t24 - t105*t38 + t33*t49)
    h[..., 4, 0] = h[..., 0, 4]
    h[..., 0, 5] = t103*(t106*t24 - t107*t24 - t41*t56)
    h[..., 5, 0] = h[..., 0, 5]
    h[..., 0, 6] = t101*(t108 + t80)
    h[..., 6, 0] = h[..., 0, 6]
    h[..., 0, 7] = t103*(t109*t24 - t111*t24 - t3*t56)
    h[..., 7, 0] = h[..., 0, 7]
    h[..., 0, 8] = t100*(t112*t24 - t113*t24 + t13*t33)
    h[..., 8, 0] = h[..., 0, 8]
    h[..., 0, 9] = -t101*(t114 + t90)
    h[..., 9, 0] = h[..., 0, 9]
    h[..., 0, 10] = t100*(t115*t24 - t116*t24 + t33*t8)
    h[..., 10, 0] = h[..., 0, 10]
    h[..., 0, 11] = t103*(t118*t24 - t120*t24 - t16*t56)
    h[..., 11, 0] = h[..., 0, 11]
    h[..., 1, 1] = t100*t11
    h[..., 1, 2] = -t121*t19
    h[..., 2, 1] = h[..., 1, 2]
    h[..., 1, 3] = t103*(-t122*t53 - t49*t56 + 2*t53*t55*t56*t58)
    h[..., 3, 1] = h[..., 1, 3]
    h[..., 1, 4] = t121*(t123 + t73)
    h[..., 4, 1] = h[..., 1, 4]
    h[..., 1, 5] = t100*(t10*t77 - t124*t39 + t33*t63)
    h[..., 5, 1] = h[..., 1, 5]
    h[..., 1, 6] = t100*(-t10*t108 - t10*t80 + t3*t33)
    h[..., 6, 1] = h[..., 1, 6]
    h[..., 1, 7] = t125*(t111 + t83)
    h[..., 7, 1] = h[..., 1, 7]
    h[..., 1, 8] = t103*(-t112*t53 + 2*t126*t53*t56*t58 - t56*t6)
    h[..., 8, 1] = h[..., 1, 8]
    h[..., 1, 9] = t103*(-t127*t53 + 2*t128*t53*t56*t58 - t56*t8)
    h[..., 9, 1] = h[..., 1, 9]
    h[..., 1, 10] = t125*(t130 + t95)
    h[..., 10, 1] = h[..., 1, 10]
    h[..., 1, 11] = t100*(t1*t33 + t10*t117 - t10*t131)
    h[..., 11, 1] = h[..., 1, 11]
    h[..., 2, 2] = t100*t20
    h[..., 2, 3] = t100*(-t132*t40 - t19*t61 + t33*t41)
    h[..., 3, 2] = h[..., 2, 3]
    h[..., 2, 4] = t103*(t104*t19 - t133*t69 - t56*t63)
    h[..., 4, 2] = h[..., 2, 4]
    h[..., 2, 5] = t103*t19*(-t107 - t77)
    h[..., 5, 2] = h[..., 2, 5]
    h[..., 2, 6] = t103*(-t13*t56 - t135*t19 + t19*t80)
    h[..., 6, 2] = h[..., 2, 6]
    h[..., 2, 7] = t100*(-t133*t82 - t19*t83 + t33*t6)
    h[..., 7, 2] = h[..., 2, 7]
    h[..., 2, 8] = t136*(-t113 - t87)
    h[..., 8, 2] = h[..., 2, 8]
    h[..., 2, 9] = t100*(-t114*t19 + t16*t33 - t19*t90)
    h[..., 9, 2] = h[..., 2, 9]
    h[..., 2, 10] = t103*(-t1*t56 + t115*t19 - t130*t19)
    h[..., 10, 2] = h[..., 2, 10]
    h[..., 2, 11] = t136*(t131 + t99)
    h[..., 11, 2] = h[..., 2, 11]
    h[..., 3, 3] = t103*(t122**2 - 4*t122*t60 - t138*(t41**2 + t50**2) + t140*t55**2)
    h[..., 3, 4] = t100*(-t104*t142 - t104*t61 + t105*t144 + t123*t61 + t141*t41)
    h[..., 4, 3] = h[..., 3, 4]
    h[..., 3, 5] = t100*(-t124*t144 + t141*t49 + t142*t77 - t145*t61 + t61*t77)
    h[..., 5, 3] = h[..., 3, 5]
    h[..., 3, 6] = t103*(-t102*t80 - t122*t135 + t122*t80 + 4*t134*t137*t139*t55 - t138*(t3*t50 + t41*t43))
    h[..., 6, 3] = h[..., 3, 6]
    h[..., 3, 7] = t100*(t142*t83 + t144*t81 + t146*t33 + t147*t61 - t35*(t19 + t41*t6) + t61*t83)
    h[..., 7, 3] = h[..., 3, 7]
    h[..., 3, 8] = t103*(-t102*t112 + t112*t122 + 4*t126*t137*t139*t55 - t126*t149 - t138*(t45*t50 + t53) - t148*t56)
    h[..., 8, 3] = h[..., 3, 8]
    h[..., 3, 9] = t103*(-t102*t127 + t122*t127 + 4*t128*t137*t139*t55 - t128*t149 - t138*(t16*t41 + t50*t52))
    h[..., 9, 3] = h[..., 3, 9]
    h[..., 3, 10] = t103*(-t102*t115 + t115*t122 - t122*t130 + 4*t129*t137*t139*t55 - t138*(t151 + t41*t42) - t150*t56)
    h[..., 10, 3] = h[..., 3, 10]
    h[..., 3, 11] = t100*(t117*t142 + t117*t61 - t131*t61 - t144*t96 + t152*t33 - t35*(-t1*t49 - t10))
    h[..., 11, 3] = h[..., 3, 11]
    h[..., 4, 4] = t103*(t104**2 - 4*t104*t69 - t138*(t49**2 + t64**2) + t140*t68**2)
    h[..., 4, 5] = t100*(t104*t145 - t104*t77 + t123*t77 - t124*t153 + t35*t41*t49)
    h[..., 5, 4] = h[..., 4, 5]
    h[..., 4, 6] = t103*(-t104*t135 + t104*t80 + 4*t134*t137*t139*t68 - t138*(t151 + t43*t64) - t146*t56 - t154*t80)
    h[..., 6, 4] = h[..., 4, 6]
    h[..., 4, 7] = t103*(t104*t109 - t104*t111 - t109*t154 + 4*t110*t137*t139*t68 - t138*(t49*t51 + t6*t64))
    h[..., 7, 4] = h[..., 4, 7]
    h[..., 4, 8] = t100*(t104*t112 - t104*t113 - t112*t123 + t153*t84 + t155*t33 - t35*(t13*t49 + t24))
    h[..., 8, 4] = h[..., 4, 8]
    h[..., 4, 9] = t100*(-t104*t114 - t104*t90 + t123*t90 + t150*t33 + t153*t88 - t35*(t14 - t16*t63 - t17))
    h[..., 9, 4] = h[..., 4, 9]
    h[..., 4, 10] = t103*(t104*t115 - t104*t130 - t115*t154 + 4*t129*t137*t139*t68 - t138*(t42*t64 + t49*t8))
    h[..., 10, 4] = h[..., 4, 10]
    h[..., 4, 11] = t103*(t104*t118 - t104*t120 - t118*t154 + 4*t119*t137*t139*t68 - t138*(t157 + t46*t49) - t156*t56)
    h[..., 11, 4] = h[..., 4, 11]
    h[..., 5, 5] = t103*(t106**2 - 4*t106*t76 - t138*(t63**2 + t74**2) + t140*t75**2)
    h[..., 5, 6] = t100*(-t108*t77 + t145*t80 + t148*t33 + t158*t78 - t35*(t3*t63 + t72) - t77*t80)
    h[..., 6, 5] = h[..., 5, 6]
    h[..., 5, 7] = t103*(t106*t109 - t106*t111 - t107*t109 + 4*t110*t137*t139*t75 - t138*(t157 + t51*t74) - t155*t56)
    h[..., 7, 5] = h[..., 5, 7]
    h[..., 5, 8] = t103*(t106*t112 - t107*t112 + 4*t126*t137*t139*t75 - t126*t159 - t138*(t13*t74 + t45*t63))
    h[..., 8, 5] = h[..., 5, 8]
    h[..., 5, 9] = t103*(t106*t127 - t107*t127 + 4*t128*t137*t139*t75 - t128*t159 - t138*(t52*t63 + t53) - t152*t56)
    h[..., 9, 5] = h[..., 5, 9]
    h[..., 5, 10] = t100*(t115*t145 - t115*t77 + t116*t77 + t156*t33 - t158*t91 - t35*(t21 - t22 - t41*t8))
    h[..., 10, 5] = h[..., 5, 10]
    h[..., 5, 11] = t103*(t106*t118 - t106*t120 - t107*t118 + 4*t119*t137*t139*t75 - t138*(t1*t63 + t46*t74))
    h[..., 11, 5] = h[..., 5, 11]
    h[..., 6, 6] = t100*(t143*t78**2 - t35*(t160 + t161) + 4*t79*t80 + t80**2)
    h[..., 6, 7] = t100*(-t108*t83 + t13*t28*t34*t6 - t147*t80 - t162*t81 - t80*t83)
    h[..., 7, 6] = h[..., 6, 7]
    h[..., 6, 8] = t100*(t108*t112 + t112*t80 - t113*t80 - t162*t84 + t3*t35*t6)
    h[..., 8, 6] = h[..., 6, 8]
    h[..., 6, 9] = t103*(-t127*t135 + t127*t80 + 4*t128*t134*t137*t139 - t138*(t16*t43 + t3*t52) - t163*t80)
    h[..., 9, 6] = h[..., 6, 9]
    h[..., 6, 10] = t100*(t108*t115 + t115*t80 - t116*t80 - t162*t91 + t31*t33 - t35*(2*t14 + t18))
    h[..., 10, 6] = h[..., 6, 10]
    h[..., 6, 11] = t103*(-t118*t135 + t118*t80 + 4*t119*t134*t137*t139 - t120*t80 - t138*(t4 + t53) - t29*t56)
    h[..., 11, 6] = h[..., 6, 11]
    h[..., 7, 7] = t100*(t143*t81**2 - t35*(t161 + t164) + 4*t82*t83 + t83**2)
    h[..., 7, 8] = t100*(-t112*t147 - t112*t83 + t113*t83 + t13*t3*t35 + t165*t84)
    h[..., 8, 7] = h[..., 7, 8]
    h[..., 7, 9] = t103*(t109*t127 - t109*t163 + 4*t110*t128*t137*t139 - t111*t127 - t138*(t151 + t17) - t31*t56)
    h[..., 9, 7] = h[..., 7, 9]
    h[..., 7, 10] = t103*(t109*t115 - t109*t130 + 4*t110*t129*t137*t139 - t111*t115 - t138*(t42*t6 + t51*t8))
    h[..., 10, 7] = h[..., 7, 10]
    h[..., 7, 11] = t100*(t117*t147 + t117*t83 - t131*t83 - t165*t96 + t30*t33 - t35*(2*t21 + t23))
    h[..., 11, 7] = h[..., 7, 11]
    h[..., 8, 8] = t100*(t112**2 - 4*t112*t85 + t143*t84**2 - t35*(t160 + t164))
    h[..., 8, 9] = t100*(-t112*t114 - t112*t90 + t113*t90 + t166*t84 + t29*t33 - t35*(-t4 + 2*t6*t8))
    h[..., 9, 8] = h[..., 8, 9]
    h[..., 8, 10] = t103*(t112*t115 - t112*t130 - t115*t167 + 4*t126*t129*t137*t139 - t138*(t157 + t22) - t30*t56)
    h[..., 10, 8] = h[..., 8, 10]
    h[..., 8, 11] = t103*(t112*t118 - t112*t120 - t118*t167 + 4*t119*t126*t137*t139 - t138*(t1*t45 + t13*t46))
    h[..., 11, 8] = h[..., 8, 11]
    h[..., 9, 9] = t100*(t143*t88**2 - t35*(t168 + t169) + 4*t89*t90 + t90**2)
    h[..., 9, 10] = t100*(-t114*t115 - t115*t90 + t116*t90 + t16*t170 + t166*t91)
    h[..., 10, 9] = h[..., 9, 10]
    h[..., 9, 11] = t100*(t114*t117 + t117*t90 - t131*t90 - t166*t96 + t170*t8)
    h[..., 11, 9] = h[..., 9, 11]
    h[..., 10, 10] = t100*(t115**2 - 4*t115*t92 + t143*t91**2 - t35*(t169 + t171))
    h[..., 10, 11] = t100*(-t115*t117 + t115*t131 + t116*t117 - t143*t91*t96 + t16*t35*t8)
    h[..., 11, 10] = h[..., 10, 11]
    h[..., 11, 11] = t100*(t117**2 - 4*t117*t97 + t143*t96**2 - t35*(t168 + t171))
    return val + np.zeros(shape), g, h


def ee_d2(a0, a1, b0, b1):
    """Squared line-line distance with gradient and Hessian."""
    a0_0 = a0[..., 0]
    a0_1 = a0[..., 1]
    a0_2 = a0[..., 2]
    a1_0 = a1[..., 0]
    a1_1 = a1[..., 1]
    a1_2 = a1[..., 2]
    b0_0 = b0[..., 0]
    b0_1 = b0[..., 1]
    b0_2 = b0[..., 2]
    b1_0 = b1[..., 0]
    b1_1 = b1[..., 1]
    b1_2 = b1[..., 2]
    t0 = a0_0 - a1_0
    t1 = -b1_2
    t2 = b0_2 + t1
    t3 = t0*t2
    t4 = a0_2 - a1_2
    t5 = -b1_0
    t6 = b0_0 + t5
    t7 = t4*t6
    t8 = -t7
    t9 = t3 + t8
    t10 = -b1_1
    t11 = b0_1 + t10
    t12 = t0*t11
    t13 = a0_1 - a1_1
    t14 = t13*t6
    t15 = -t14
    t16 = t12 + t15
    t17 = t13*t2
    t18 = t11*t4
    t19 = -t18
    t20 = t17 + t19
    t21 = t16**2 + t20**2
    t22 = t21 + t9**2
    t23 = t22**(-1.0)
    t24 = -b0_0
    t25 = a0_0 + t24
    t26 = -b0_2
    t27 = a0_2 + t26
    t28 = -b0_1
    t29 = a0_1 + t28
    t30 = -t0
    t31 = -t2
    t32 = t30*t31
    t33 = -t4
    t34 = -t6
    t35 = t33*t34
    t36 = t32 - t35
    t37 = t16*t27 + t20*t25 - t29*t36
    t38 = t37**2
    t39 = t23*t38
    t40 = -t11
    t41 = t30*t40
    t42 = -t13
    t43 = -t34*t42
    t44 = t41 + t43
    t45 = -t36
    t46 = t11*t44 + t31*t45
    t47 = -t37
    t48 = t21 + t36**2
    t49 = t48**(-1.0)
    t50 = t47*t49
    t51 = t46*t50
    t52 = t11*t27
    t53 = t2*t29
    t54 = t20 + t52 - t53
    t55 = 2*t50
    t56 = t31*t42
    t57 = -t33*t40
    t58 = t56 + t57
    t59 = t2*t58 + t34*t44
    t60 = t50*t59
    t61 = t2*t25
    t62 = t27*t6
    t63 = t61 - t62
    t64 = t40*t58 + t45*t6
    t65 = t50*t64
    t66 = t29*t6
    t67 = t11*t25
    t68 = t66 - t67
    t69 = t16 + t68
    t70 = t11*t16 + t2*t36
    t71 = t23*t37
    t72 = t70*t71
    t73 = -t52 + t53
    t74 = 2*t71
    t75 = t16*t6 - t2*t20
    t76 = t71*t75
    t77 = t11*t20 + t36*t6
    t78 = t71*t77
    t79 = t4*t45 + t42*t44
    t80 = t50*t79
    t81 = t29*t4
    t82 = t13*t27
    t83 = t81 - t82
    t84 = t0*t44 + t33*t58
    t85 = t50*t84
    t86 = t0*t27
    t87 = t25*t4
    t88 = t86 - t87
    t89 = t88 + t9
    t90 = t13*t25
    t91 = t0*t29
    t92 = t13*t58 + t30*t45
    t93 = t50*t92
    t94 = t13*t16 + t36*t4
    t95 = t71*t94
    t96 = t30*t44 + t4*t58
    t97 = t50*t96
    t98 = t0*t36 + t13*t20
    t99 = t71*t98
    t100 = -t90 + t91
    t101 = -t54
    t102 = t11**2
    t103 = t47**2
    t104 = t103*t49
    t105 = t48**(-2.0)
    t106 = 4*t103*t105
    t107 = 2*t49
    t108 = -t61 + t62 + t9
    t109 = t39*t6
    t110 = 2*t72
    t111 = -t75
    t112 = t54*t74
    t113 = t22**(-2.0)
    t114 = 4*t113*t38
    t115 = t114*t70
    t116 = 2*t23
    t117 = 2*t54
    t118 = t109*t2 - t115*t77
    t119 = -t73
    t120 = t11*t40
    t121 = t2*t31
    t122 = 2*t51
    t123 = t2*t45 + t40*t44
    t124 = t101*t55
    t125 = t2*t47
    t126 = t104*t6
    t127 = t11*t126
    t128 = t31*t58 + t44*t6
    t129 = -t66 + t67
    t130 = -t129
    t131 = t11*t47
    t132 = t126*t2
    t133 = t11*t58 + t34*t45
    t134 = -t81 + t82
    t135 = t134 + t20
    t136 = t11*t42
    t137 = t31*t4
    t138 = 2*t101
    t139 = -t89
    t140 = a1_2 + t1
    t141 = t100 + t16
    t142 = a1_1 + t10
    t143 = t39*(2*t3 + t8)
    t144 = -t134
    t145 = t11*t13
    t146 = t31*t33
    t147 = t13*t44 + t33*t45
    t148 = a1_2 + t26
    t149 = t39*(-2*t12 - t15)
    t150 = t0*t16 - t20*t4
    t151 = -t150
    t152 = -t100
    t153 = a1_1 + t28
    t154 = -t32 + t35
    t155 = t0*t45 + t42*t58
    t156 = t2**2
    t157 = t11*t2
    t158 = t157*t39
    t159 = 2*t108
    t160 = t159*t78
    t161 = t111*t74
    t162 = t111*t114
    t163 = t162*t77
    t164 = 2*t60
    t165 = t108*t55
    t166 = t34*t6
    t167 = t39*(-t12 + 2*t13*t6)
    t168 = t0*t34
    t169 = t2*t33
    t170 = a1_0 + t5
    t171 = t30*t34
    t172 = t2*t4
    t173 = a1_0 + t24
    t174 = t39*(-2*t17 - t19)
    t175 = -t69
    t176 = t6**2
    t177 = 2*t65
    t178 = t175*t55
    t179 = 2*t175
    t180 = t39*(2*t11*t4 - t17)
    t181 = t150*t74
    t182 = t114*t77
    t183 = t30*t6
    t184 = t13*t40
    t185 = 2*t95
    t186 = t182*t94 + t39*(t3 - 2*t7)
    t187 = t0*t6
    t188 = t40*t42
    t189 = 2*t73
    t190 = 2*t78
    t191 = 2*t119
    t192 = t123*t55
    t193 = a0_2 + t1
    t194 = a0_1 + t10
    t195 = t147*t55
    t196 = 2*t76
    t197 = 2*t63
    t198 = t128*t55
    t199 = a0_0 + t5
    t200 = t155*t55
    t201 = 2*t130
    t202 = t133*t55
    t203 = t151*t74
    t204 = t42**2
    t205 = t4**2
    t206 = t0*t39
    t207 = t13*t206
    t208 = t114*t94
    t209 = 2*t135
    t210 = t206*t4 - t208*t98
    t211 = t13*t42
    t212 = t33*t4
    t213 = 2*t80
    t214 = t4*t47
    t215 = t0*t104
    t216 = t13*t215
    t217 = t13*t47
    t218 = t215*t4
    t219 = t0**2
    t220 = t33**2
    t221 = t13*t4
    t222 = t221*t39
    t223 = 2*t99
    t224 = t114*t98
    t225 = t150*t224 + t222 - t223*t89
    t226 = 2*t85
    t227 = t0*t30
    t228 = 2*t97
    t229 = t30**2
    t230 = t13**2
    t231 = 2*t93
    t232 = 4*t50
    val = t39
    shape = np.broadcast(*[a0_0, a0_1, a0_2, a1_0, a1_1, a1_2, b0_0, b0_1, b0_2, b1_0, b1_1, b1_2]).shape
    g = np.empty(shape + (12,))
    g[..., 0] = t55*(-t51 - t54)
    g[..., 1] = t55*(t3 - t60 - t63 - t7)
    g[..., 2] = t55*(-t65 - t69)
    g[..., 3] = t74*(t72 + t73)
    g[..., 4] = -t74*(t63 + t76)
    g[..., 5] = t74*(-t68 - t78)
    g[..., 6] = t55*(t17 - t18 - t80 - t83)
    g[..., 7] = t55*(-t85 - t89)
    g[..., 8] = t55*(t12 - t14 - t90 + t91 - t93)
    g[..., 9] = t74*(-t83 - t95)
    g[..., 10] = t55*(t86 - t87 - t97)
    g[..., 11] = t74*(t100 + t99)
    h = np.empty(shape + (12, 12))
    h[..., 0, 0] = t107*(t101**2 - 4*t101*t51 - t104*(t102 + t31**2) + t106*t46**2)
    h[..., 0, 1] = t116*(t108*t110 - t108*t54 + t109*t11 - t111*t112 + t111*t115)
    h[..., 1, 0] = h[..., 0, 1]
    h[..., 0, 2] = t116*(-t110*t69 + t117*t78 + t118 + t54*t69)
    h[..., 2, 0] = h[..., 0, 2]
    h[..., 0, 3] = t107*(t101*t119 + 4*t103*t105*t123*t46 - t104*(t120 + t121) - t119*t122 - t123*t124)
    h[..., 3, 0] = h[..., 0, 3]
    h[..., 0, 4] = t107*(t101*t63 + 4*t103*t105*t128*t46 - t122*t63 - t124*t128 + t125 - t127)
    h[..., 4, 0] = h[..., 0, 4]
    h[..., 0, 5] = t107*(t101*t130 + 4*t103*t105*t133*t46 - t122*t130 - t124*t133 - t131 - t132)
    h[..., 5, 0] = h[..., 0, 5]
    h[..., 0, 6] = t107*(t101*t135 + 4*t103*t105*t46*t79 - t104*(t136 + t137) - t122*t135 - t138*t80)
    h[..., 6, 0] = h[..., 0, 6]
    h[..., 0, 7] = t107*(t101*t139 + 4*t103*t105*t46*t84 - t104*(t12 + t44) - t122*t139 - t138*t85 - t140*t47)
    h[..., 7, 0] = h[..., 0, 7]
    h[..., 0, 8] = t116*(4*t113*t38*t70*t98 - t117*t99 + 2*t141*t23*t37*t70 - t141*t54 - t142*t37 - t143)
    h[..., 8, 0] = h[..., 0, 8]
    h[..., 0, 9] = t107*(t101*t144 + 4*t103*t105*t147*t46 - t104*(t145 + t146) - t122*t144 - t124*t147)
    h[..., 9, 0] = h[..., 0, 9]
    h[..., 0, 10] = t116*(-t112*t151 + 4*t113*t151*t38*t70 - t148*t37 - t149 + 2*t23*t37*t70*t88 - t54*t88)
    h[..., 10, 0] = h[..., 0, 10]
    h[..., 0, 11] = t107*(t101*t152 + 4*t103*t105*t155*t46 - t104*(t0*t31 + t154) - t122*t152 - t124*t155 - t153*t47)
    h[..., 11, 0] = h[..., 0, 11]
    h[..., 1, 1] = t107*(-t104*(t156 + t34**2) + t106*t59**2 + t108**2 - 4*t108*t60)
    h[..., 1, 2] = t116*(-t108*t69 + t158 - t160 - t161*t69 - t163)
    h[..., 2, 1] = h[..., 1, 2]
    h[..., 1, 3] = t107*(4*t103*t105*t123*t59 + t108*t119 - t119*t164 - t123*t165 - t125 - t127)
    h[..., 3, 1] = h[..., 1, 3]
    h[..., 1, 4] = t107*(4*t103*t105*t128*t59 - t104*(t121 + t166) + t108*t63 - t128*t165 - t164*t63)
    h[..., 4, 1] = h[..., 1, 4]
    h[..., 1, 5] = t116*(-t108*t129 - t129*t161 - t158 + t160 + t163 - t37*t6)
    h[..., 5, 1] = h[..., 1, 5]
    h[..., 1, 6] = t116*(t108*t135 + 2*t111*t135*t23*t37 - t140*t37 - t159*t95 - t162*t94 - t167)
    h[..., 6, 1] = h[..., 1, 6]
    h[..., 1, 7] = t107*(4*t103*t105*t59*t84 - t104*(t168 + t169) + t108*t139 - t139*t164 - t159*t85)
    h[..., 7, 1] = h[..., 1, 7]
    h[..., 1, 8] = t107*(4*t103*t105*t59*t92 - t104*(t17 + t58) + t108*t141 - t141*t164 - t159*t93 - t170*t47)
    h[..., 8, 1] = h[..., 1, 8]
    h[..., 1, 9] = t107*(4*t103*t105*t147*t59 - t104*(t13*t34 + t44) + t108*t144 - t144*t164 - t147*t165 - t148*t47)
    h[..., 9, 1] = h[..., 1, 9]
    h[..., 1, 10] = t107*(4*t103*t105*t59*t96 - t104*(t171 + t172) + t108*t88 - t159*t97 - t164*t88)
    h[..., 10, 1] = h[..., 1, 10]
    h[..., 1, 11] = -t116*(t100*t108 + t100*t161 + t159*t99 + t162*t98 + t173*t37 + t174)
    h[..., 11, 1] = h[..., 1, 11]
    h[..., 2, 2] = t107*(-t104*(t176 + t40**2) + t106*t64**2 + t175**2 - 4*t175*t65)
    h[..., 2, 3] = t107*(4*t103*t105*t123*t64 + t119*t175 - t119*t177 - t123*t178 + t131 - t132)
    h[..., 3, 2] = h[..., 2, 3]
    h[..., 2, 4] = t107*(4*t103*t105*t128*t64 - t104*t157 - t128*t178 + t175*t63 - t177*t63 - t47*t6)
    h[..., 4, 2] = h[..., 2, 4]
    h[..., 2, 5] = t107*(4*t103*t105*t133*t64 - t104*(t120 + t166) + t130*t175 - t130*t177 - t133*t178)
    h[..., 5, 2] = h[..., 2, 5]
    h[..., 2, 6] = t107*(4*t103*t105*t64*t79 - t104*(t154 + t7) + t135*t175 - t135*t177 - t142*t47 - t179*t80)
    h[..., 6, 2] = h[..., 2, 6]
    h[..., 2, 7] = t116*(-t150*t182 - t170*t37 - t180 - t181*t69 + 2*t23*t37*t77*t89 + t69*t89)
    h[..., 7, 2] = h[..., 2, 7]
    h[..., 2, 8] = t107*(4*t103*t105*t64*t92 - t104*(t183 + t184) + t141*t175 - t141*t177 - t179*t93)
    h[..., 8, 2] = h[..., 2, 8]
    h[..., 2, 9] = t116*(2*t134*t23*t37*t77 + t134*t69 - t153*t37 - t185*t69 - t186)
    h[..., 9, 2] = h[..., 2, 9]
    h[..., 2, 10] = t107*(4*t103*t105*t64*t96 - t104*(t4*t40 + t58) - t173*t47 + t175*t88 - t177*t88 - t179*t97)
    h[..., 10, 2] = h[..., 2, 10]
    h[..., 2, 11] = t107*(4*t103*t105*t155*t64 - t104*(t187 + t188) + t152*t175 - t152*t177 - t155*t178)
    h[..., 11, 2] = h[..., 2, 11]
    h[..., 3, 3] = t116*(t114*t70**2 - t39*(t102 + t156) + 4*t72*t73 + t73**2)
    h[..., 3, 4] = t116*(t11*t23*t38*t6 - t110*t63 - t115*t75 - t189*t76 - t63*t73)
    h[..., 4, 3] = h[..., 3, 4]
    h[..., 3, 5] = t116*(t110*t129 + t118 + t129*t73 - t190*t73)
    h[..., 5, 3] = h[..., 3, 5]
    h[..., 3, 6] = t107*(4*t103*t105*t123*t79 - t104*(t172 + t188) + t119*t135 - t135*t192 - t191*t80)
    h[..., 6, 3] = h[..., 3, 6]
    h[..., 3, 7] = t116*(-t115*t150 - t149 - t181*t73 - t193*t37 + 2*t23*t37*t70*t89 + t73*t89)
    h[..., 7, 3] = h[..., 3, 7]
    h[..., 3, 8] = t107*(4*t103*t105*t123*t92 - t104*(t154 + t2*t30) + t119*t141 - t141*t192 - t191*t93 - t194*t47)
    h[..., 8, 3] = h[..., 3, 8]
    h[..., 3, 9] = t107*(4*t103*t105*t123*t147 - t104*(t169 + t184) + t119*t144 - t119*t195 - t144*t192)
    h[..., 9, 3] = h[..., 3, 9]
    h[..., 3, 10] = t107*(4*t103*t105*t123*t96 - t104*(2*t41 + t43) + t119*t88 - t191*t97 - t192*t88 - t27*t47)
    h[..., 10, 3] = h[..., 3, 10]
    h[..., 3, 11] = t116*(t100*t110 + t100*t73 + t115*t98 - t143 + t189*t99 - t29*t37)
    h[..., 11, 3] = h[..., 3, 11]
    h[..., 4, 4] = t116*(t114*t75**2 - t39*(t156 + t176) + t63**2 + 4*t63*t76)
    h[..., 4, 5] = t116*(-t129*t196 - t129*t63 + t158 + t182*t75 + t190*t63)
    h[..., 5, 4] = h[..., 4, 5]
    h[..., 4, 6] = t107*(4*t103*t105*t128*t79 - t104*(t42*t6 + t44) - t135*t198 + t135*t63 - t193*t47 - t197*t80)
    h[..., 6, 4] = h[..., 4, 6]
    h[..., 4, 7] = t107*(4*t103*t105*t128*t84 - t104*(t146 + t187) - t139*t198 + t139*t63 - t197*t85)
    h[..., 7, 4] = h[..., 4, 7]
    h[..., 4, 8] = t116*(t114*t75*t98 + t141*t196 + t141*t63 - t174 + t197*t99 - t199*t37)
    h[..., 8, 4] = h[..., 4, 8]
    h[..., 4, 9] = t116*(4*t113*t38*t75*t94 - t134*t196 - t134*t63 - t167 + 2*t23*t37*t63*t94 - t27*t37)
    h[..., 9, 4] = h[..., 4, 9]
    h[..., 4, 10] = t107*(4*t103*t105*t128*t96 - t104*(t137 + t183) - t197*t97 - t198*t88 + t63*t88)
    h[..., 10, 4] = h[..., 4, 10]
    h[..., 4, 11] = t107*(4*t103*t105*t128*t155 - t104*(2*t56 + t57) - t152*t198 + t152*t63 - t200*t63 - t25*t47)
    h[..., 11, 4] = h[..., 4, 11]
    h[..., 5, 5] = t116*(t114*t77**2 + t129**2 - 4*t129*t78 - t39*(t102 + t176))
    h[..., 5, 6] = t116*(-t129*t135 + 2*t129*t23*t37*t94 + 2*t135*t23*t37*t77 - t186 - t194*t37)
    h[..., 6, 5] = h[..., 5, 6]
    h[..., 5, 7] = t107*(4*t103*t105*t133*t84 - t104*(t11*t33 + t58) + t130*t139 - t139*t202 - t199*t47 - t201*t85)
    h[..., 7, 5] = h[..., 5, 7]
    h[..., 5, 8] = t107*(4*t103*t105*t133*t92 - t104*(t145 + t171) + t130*t141 - t141*t202 - t201*t93)
    h[..., 8, 5] = h[..., 5, 8]
    h[..., 5, 9] = t107*(4*t103*t105*t133*t147 - t104*(-t32 + 2*t33*t34) + t130*t144 - t130*t195 - t144*t202 - t29*t47)
    h[..., 9, 5] = h[..., 5, 9]
    h[..., 5, 10] = t116*(4*t113*t151*t38*t77 - t129*t203 - t129*t88 - t180 + 2*t23*t37*t77*t88 - t25*t37)
    h[..., 10, 5] = h[..., 5, 10]
    h[..., 5, 11] = t107*(4*t103*t105*t133*t155 - t104*(t136 + t168) + t130*t152 - t130*t200 - t152*t202)
    h[..., 11, 5] = h[..., 5, 11]
    h[..., 6, 6] = t107*(-t104*(t204 + t205) + t106*t79**2 + t135**2 - 4*t135*t80)
    h[..., 6, 7] = t116*(t135*t181 - t135*t89 - t150*t208 + t185*t89 + t207)
    h[..., 7, 6] = h[..., 6, 7]
    h[..., 6, 8] = t116*(t135*t141 - t141*t185 + t209*t99 + t210)
    h[..., 8, 6] = h[..., 6, 8]
    h[..., 6, 9] = t107*(4*t103*t105*t147*t79 - t104*(t211 + t212) + t135*t144 - t135*t195 - t144*t213)
    h[..., 9, 6] = h[..., 6, 9]
    h[..., 6, 10] = t107*(4*t103*t105*t79*t96 + t135*t88 - t209*t97 - t213*t88 + t214 - t216)
    h[..., 10, 6] = h[..., 6, 10]
    h[..., 6, 11] = t107*(4*t103*t105*t155*t79 + t135*t152 - t135*t200 - t152*t213 - t217 - t218)
    h[..., 11, 6] = h[..., 6, 11]
    h[..., 7, 7] = t107*(-t104*(t219 + t220) + t106*t84**2 + t139**2 - 4*t139*t85)
    h[..., 7, 8] = t116*(t141*t181 - t141*t89 + t225)
    h[..., 8, 7] = h[..., 7, 8]
    h[..., 7, 9] = t107*(4*t103*t105*t147*t84 + t139*t144 - t139*t195 - t144*t226 - t214 - t216)
    h[..., 9, 7] = h[..., 7, 9]
    h[..., 7, 10] = t107*(4*t103*t105*t84*t96 - t104*(t212 + t227) - t139*t228 + t139*t88 - t226*t88)
    h[..., 10, 7] = h[..., 7, 10]
    h[..., 7, 11] = t116*(-t0*t37 - t100*t181 + t100*t89 - t225)
    h[..., 11, 7] = h[..., 7, 11]
    h[..., 8, 8] = t107*(-t104*(t229 + t230) + t106*t92**2 + t141**2 - 4*t141*t93)
    h[..., 8, 9] = t107*(4*t103*t105*t147*t92 + t141*t144 - t141*t195 - t144*t231 + t217 - t218)
    h[..., 9, 8] = h[..., 8, 9]
    h[..., 8, 10] = t107*(-t0*t47 + 4*t103*t105*t92*t96 - t104*t221 - t141*t228 + t141*t88 - t231*t88)
    h[..., 10, 8] = h[..., 8, 10]
    h[..., 8, 11] = t107*(4*t103*t105*t155*t92 - t104*(t211 + t227) + t141*t152 - t141*t200 - t152*t231)
    h[..., 11, 8] = h[..., 8, 11]
    h[..., 9, 9] = t107*(-t104*(t220 + t230) + t106*t147**2 + t144**2 - t144*t147*t232)
    h[..., 9, 10] = t116*(-t134*t203 - t134*t88 + t151*t208 + t185*t88 + t207)
    h[..., 10, 9] = h[..., 9, 10]
    h[..., 9, 11] = t116*(t100*t134 - t100*t185 + t134*t223 + t210)
    h[..., 11, 9] = h[..., 9, 11]
    h[..., 10, 10] = t107*(-t104*(t205 + t229) + t106*t96**2 + t88**2 - 4*t88*t97)
    h[..., 10, 11] = t116*(-t100*t203 - t100*t88 - t151*t224 + t222 - t223*t88)
    h[..., 11, 10] = h[..., 10, 11]
    h[..., 11, 11] = t107*(-t104*(t204 + t219) + t106*t155**2 + t152**2 - t152*t155*t232)
    return val + np.zeros(shape), g, h
