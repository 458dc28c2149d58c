from ctile import *
import sys
D={}
# empty left; top pair1 TF, right pair2 TF, bottom pair3 FT
D['C1']=({1:('top','TF'),2:('right','TF'),3:('bottom','FT')},
 dict(m=(-1.2,0),w1=(-2.1,0.1),w2=(-0.4,0.5),c1=(-2.6,0.9),c2=(-2.6,-0.7),c3=(0.5,0.7),
      t1=(-2.6,1.9),f1=(-1.1,0.95),t2=(1.4,0.9),f2=(-0.5,-0.6),t3=(-2.5,-1.7),f3=(-1.3,-0.95)),
 dict(t1=[(-3.6,2.6),(-3.6,3.8),(-2.6,4.3),(-1.6,4.0)],
      f1=[(-0.6,1.9),(0.4,2.6),(0.6,3.7),(-0.2,4.3)],
      t2=[(2.2,1.5),(3.0,2.5),(4.0,2.9),(4.5,2.0)],
      f2=[(0.6,-0.9),(1.8,-0.5),(3.0,-0.2),(4.0,0.0),(4.4,-0.7)],
      t3=[(-3.4,-2.5),(-3.4,-3.6),(-2.5,-4.3),(-1.6,-4.2)],
      f3=[(-0.6,-1.9),(0.6,-2.2),(1.6,-2.6),(1.8,-3.7),(1.3,-4.4)]))
D['C2']=({2:('top','TF'),1:('right','FT'),3:('bottom','TF')},
 dict(m=(-1.0,0.2),w2=(-1.4,1.0),c3=(-1.3,2.0),w1=(-0.9,-0.7),c1=(0.0,-1.2),c2=(-1.2,-1.6),
      t2=(-1.2,2.9),f2=(-0.2,0.8),f1=(-0.1,-0.2),t1=(1.0,-1.2),t3=(-0.4,-2.3),f3=(-1.8,-0.4)),
 dict(t2=[(-2.2,2.4),(-3.4,2.6),(-4.0,3.6),(-3.2,4.4),(-2.0,4.3)],
      f2=[(0.6,1.6),(1.8,2.0),(2.6,3.0),(2.0,4.1),(1.2,4.2)],
      f1=[(1.0,0.2),(2.2,0.6),(3.3,1.0),(4.0,2.0),(4.5,1.5)],
      t1=[(2.4,-1.6),(3.5,-2.2),(4.2,-3.0),(4.6,-2.0),(4.3,-1.2)],
      t3=[(0.6,-2.6),(1.8,-2.8),(2.4,-3.8),(1.8,-4.6)],
      f3=[(-2.6,-1.2),(-3.4,-2.2),(-3.0,-3.4),(-2.2,-4.2),(-1.4,-4.4)]))
D['C3']=({1:('top','FT'),3:('right','TF'),2:('bottom','TF')},
 dict(m=(-1.0,0.0),f1=(-1.3,0.9),w1=(-0.2,0.5),f3=(-0.2,-0.5),w2=(-0.9,-1.0),f2=(-1.9,-0.4),
      c1=(-0.1,1.4),c2=(0.7,0.7),t1=(0.3,2.3),t3=(1.6,0.9),c3=(-0.6,-1.9),t2=(0.0,-2.6)),
 dict(f1=[(-1.6,2.0),(-2.6,2.8),(-2.4,4.0),(-1.6,4.4)],
      t1=[(1.4,2.6),(2.6,2.8),(3.8,3.3),(3.4,4.4),(2.2,4.4)],
      t3=[(2.0,1.9),(3.1,2.0),(4.2,2.3),(4.5,1.5)],
      f3=[(1.0,-0.9),(2.2,-1.3),(3.4,-1.5),(4.3,-1.1)],
      t2=[(1.2,-2.4),(2.4,-2.6),(3.4,-3.2),(3.0,-4.3),(1.8,-4.4)],
      f2=[(-2.8,-1.2),(-3.4,-2.4),(-2.9,-3.6),(-2.0,-4.3),(-1.4,-4.4)]))

P2=(1,2)
D['D1']=({1:('top','TF'),2:('bottom','TF')},
 dict(m=(0,0),f1=(0.5,0.8),w1=(-0.6,0.7),c1=(-1.2,1.4),t1=(-1.2,2.4),f2=(-0.6,-0.8),w2=(0.6,-0.7),c3=(1.2,-1.4),t2=(1.2,-2.4)),
 dict(t1=[(-2.4,2.6),(-3.2,3.6),(-2.4,4.4),(-1.6,4.2)],f1=[(1.5,1.4),(2.6,2.2),(2.8,3.4),(2.0,4.3),(1.4,4.4)],
      t2=[(2.4,-2.6),(3.2,-3.6),(2.4,-4.4),(1.6,-4.2)],f2=[(-1.5,-1.4),(-2.6,-2.2),(-2.8,-3.4),(-2.0,-4.3),(-1.4,-4.4)]),P2)
D['D2']=({1:('top','TF'),2:('right','FT')},
 dict(m=(-1,0),w1=(-1.6,0.7),c1=(-1.6,1.6),t1=(-1.5,2.5),f1=(-0.4,0.8),f2=(-0.1,0.1),w2=(-0.5,-0.8),c3=(0.3,-1.3),t2=(1.2,-1.4)),
 dict(t1=[(-2.6,2.9),(-3.0,4.0),(-2.0,4.4),(-1.5,4.5)],f1=[(0.0,1.9),(1.0,2.5),(1.4,3.6),(1.0,4.3)],
      f2=[(1.0,0.3),(2.2,0.8),(3.3,1.6),(4.3,1.6)],t2=[(2.4,-1.6),(3.5,-1.2),(4.4,-0.6)]),P2)
D['D3']=({1:('top','TF'),2:('right','TF')},
 dict(m=(-1,0),w1=(-1.6,0.7),c1=(-1.6,1.6),t1=(-1.5,2.5),f1=(-0.5,0.8),w2=(-0.05,-0.1),c3=(0.8,0.3),t2=(1.7,0.6),f2=(-0.8,-0.95)),
 dict(t1=[(-2.6,2.9),(-3.0,4.0),(-2.0,4.4),(-1.5,4.5)],f1=[(-0.2,1.9),(0.8,2.5),(1.2,3.6),(0.8,4.3)],
      t2=[(2.6,1.3),(3.6,1.9),(4.4,1.6)],f2=[(0.2,-1.5),(1.4,-1.6),(2.6,-1.4),(3.7,-0.9),(4.4,-0.8)]),P2)
D['D4']=({1:('top','FT'),2:('bottom','TF')},
 dict(m=(0,0),f1=(-0.6,0.75),w1=(0.6,0.7),c1=(1.2,1.4),t1=(1.2,2.4),w2=(0.6,-0.7),c3=(1.2,-1.4),t2=(1.2,-2.4),f2=(-0.6,-0.8)),
 dict(f1=[(-1.5,1.4),(-2.6,2.2),(-2.8,3.4),(-2.0,4.3),(-1.4,4.4)],t1=[(2.4,2.6),(3.2,3.6),(2.4,4.4),(1.6,4.2)],
      t2=[(2.4,-2.6),(3.2,-3.6),(2.4,-4.4),(1.6,-4.2)],f2=[(-1.5,-1.4),(-2.6,-2.2),(-2.8,-3.4),(-2.0,-4.3),(-1.4,-4.4)]),P2)
D['D5']=({1:('top','FT'),2:('right','TF')},
 dict(m=(-1,-0.5),f1=(-1.6,0.3),w1=(-0.5,0.3),c1=(-0.2,1.2),t1=(0.3,2.0),w2=(0.0,-0.7),c3=(0.9,-0.3),t2=(1.8,0.1),f2=(-0.6,-1.4)),
 dict(f1=[(-2.4,1.2),(-2.6,2.4),(-2.2,3.6),(-1.6,4.4)],t1=[(0.6,3.0),(1.6,3.4),(2.2,4.3),(1.6,4.6)],
      t2=[(2.6,0.9),(3.4,1.9),(4.3,2.4),(4.5,1.6)],f2=[(0.4,-1.8),(1.6,-1.9),(2.8,-1.8),(3.8,-1.3),(4.4,-1.0)]),P2)

if __name__=='__main__':
    for name in sys.argv[1:]:
        crun(name,*D[name])
