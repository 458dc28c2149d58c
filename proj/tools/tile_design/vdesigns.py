from vtile import *
import sys
T3L=[(1.2,3.0),(0.4,3.7),(-0.8,3.2),(-1.9,3.6),(-1.8,4.6)]
F3T=[(2.6,1.2),(3.8,1.8),(3.9,3.3),(2.8,4.3),(1.6,4.2)]
T1B=[(-1.2,-2.5),(-2.2,-3.2),(-2.6,-4.4),(-1.6,-4.5)]
F1B=[(2.2,-2.2),(3.7,-1.8),(4.1,-3.2),(3.0,-4.2),(1.7,-4.3)]
T2L=[(-2.4,2.3),(-3.2,3.4),(-4.3,3.0),(-4.3,1.8)]
F2L=[(-2.9,-0.6),(-3.3,-1.9),(-4.3,-2.2),(-4.4,-1.3)]
D={
 'B1':({3:('top','TF'),1:('bottom','FT'),2:('left','FT')},dict(t3=T3L,f3=F3T,t1=T1B,f1=F1B,t2=T2L,f2=F2L),(0,0)),
 'B2':({3:('top','TF'),1:('right','FT'),2:('left','FT')},dict(t3=T3L,f3=F3T,
        f1=[(2.3,-2.0),(3.3,-1.4),(3.4,0.2),(4.3,0.9)],t1=[(0.6,-2.9),(2.2,-3.3),(3.6,-2.9),(4.4,-2.0)],t2=T2L,f2=F2L),(0,0)),
 'B3':({3:('right','TF'),1:('bottom','FT'),2:('left','FT')},dict(
        f3=[(2.4,2.0),(3.3,1.3),(3.7,0.0),(4.3,-0.8)],t3=[(0.9,3.3),(2.2,4.0),(3.5,3.7),(4.4,2.8),(4.5,1.6)],
        t1=T1B,f1=[(2.0,-2.4),(3.4,-2.4),(4.1,-3.4),(3.0,-4.3),(1.7,-4.3)],t2=T2L,f2=F2L),(0,0)),
 'V11':({2:('right','FT'),1:('bottom','FT')},dict(
        t2=[(-2.2,1.9),(-1.2,2.6),(0.5,2.6),(2.2,2.0),(3.3,1.0),(4.0,-0.2),(4.4,-0.8)],
        f2=[(-2.9,1.0),(-2.9,2.6),(-1.6,3.6),(0.5,3.7),(2.5,3.4),(3.8,2.6),(4.5,1.6)],
        t1=T1B,f1=[(2.0,-2.6),(3.4,-2.6),(4.1,-3.6),(3.0,-4.3),(1.7,-4.3)]),(-0.3,-0.8)),
 'V12':({3:('left','TF'),1:('bottom','FT')},dict(
        t3=[(-0.2,2.8),(-1.6,3.0),(-2.9,2.4),(-3.6,1.4),(-4.3,-0.3)],
        f3=[(2.0,2.0),(1.6,3.4),(0.0,4.1),(-1.8,4.2),(-3.4,3.6),(-4.4,2.6),(-4.6,1.6)],
        t1=[(-1.0,-2.8),(-2.0,-3.6),(-2.6,-4.4),(-1.6,-4.5)],f1=F1B),(0.3,-0.6)),
}
for name in sys.argv[1:]:
    sides,R,off=D[name]; run(name,sides,R,offset=off)
