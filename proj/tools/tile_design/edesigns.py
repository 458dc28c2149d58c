from designer import *
import sys
def etile():
    d=Design(square())
    for s,y in (('t',1),('f',-1)):
        d.add(f'{s}1',(-6,y),fixed=True,tf=True); d.add(f'{s}2',(-5,y),fixed=True)
        d.add(f'{s}37',(6,y),fixed=True,tf=True); d.add(f'{s}36',(5,y),fixed=True)
        d.edge(f'{s}1',f'{s}2'); d.edge(f'{s}36',f'{s}37')
        sg=1 if s=='t' else -1
        wp=[(-4.2,1.5),(-4.2,4.3),(-2.6,4.3),(-2.6,1.8),(-1.0,1.8),(-1.0,4.3),(0.6,4.3),(0.6,1.8),(2.2,1.8),(2.2,4.3),(3.8,4.3),(3.8,1.5)]
        wp=[(x,sg*y) for x,y in wp]
        print(s,d.path([f'{s}{j}' for j in range(2,37)],wp))
    return d
def ltile():
    reg=unary_union([box(-18,-6,-6,6),box(-6,-6,6,6),box(-6,-18,6,-6)])
    d=Design(reg)
    # inner strand a: (-18,-1) -> (-1,-18); outer strand b: (-18,1) -> (1,-18)
    for s,(p,q,wp) in {'a':((-18,-1),(-1,-18),[(-5,-1),(-1,-5)]),'b':((-18,1),(1,-18),[(-2.6,1),(1,-2.6)])}.items():
        d.add(f'{s}1',p,fixed=True,tf=True); d.add(f'{s}2',(p[0]+1,p[1]),fixed=True)
        d.add(f'{s}37',q,fixed=True,tf=True); d.add(f'{s}36',(q[0],q[1]+1),fixed=True)
        d.edge(f'{s}1',f'{s}2'); d.edge(f'{s}36',f'{s}37')
        print(s,d.path([f'{s}{j}' for j in range(2,37)],wp))
    return d
for name in sys.argv[1:]:
    d=etile() if name=='E' else ltile()
    d.plot(f'tiles/{name}_init.png',labels=False)
    for r in range(8):
        v=d.optimize(nmin=1.03,emax=0.975,emin=0.5,gab=0.1); b=d.check(); print(name,v,len(b),b[:5])
        if not b: break
    d.plot(f'tiles/{name}.png',labels=False); d.dump(f'tiles/{name}.json')
