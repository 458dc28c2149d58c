from designer import *
import sys
SEED={'T1':(-0.7,1.61),'T2':(-0.45,0.85),'N1':(-0.36,0.65),'F':(-0.35,-0.75),'a1':(1.57,-0.74),'a2':(-1.68,-0.86),'a3':(1.62,0.34),
'b1':(1.55,-0.81),'b2':(-1.62,-0.9),'b3':(1.6,0.26),'t1,0':(-0.15,-1.11),'f1,0':(0.62,-0.48),'t2,0':(-1.35,0.9),'f2,0':(-1.08,-0.06),
't3,0':(0.28,1.43),'f3,0':(0.64,0.51),'N2':(0.0,0.0)}
J1={'t1':(-0.25,-1.87),'f1':(0.79,-1.46),'t2':(-1.97,1.27),'f2':(-2.03,0.14),'t3':(0.58,2.12),'f3':(1.27,1.28)}
base=['N2','f1,0','f3,0','N1','f2,0','F','t1,0','T2','T1','t3,0','t2,0','a1','b1','a2','b2','a3','b3']
CE=[('F','t1,0'),('T1','T2'),('T1','t2,0'),('T1','t3,0'),('T2','N1'),('T2','t2,0'),('T2','t3,0'),
 ('a1','b1'),('a1','f1,0'),('a2','b2'),('a2','f2,0'),('a3','b3'),('a3','f3,0'),('b1','f1,0'),('b2','f2,0'),('b3','f3,0'),
 ('f1,0','f3,0'),('t1,0','f1,0'),('t2,0','f2,0'),('t3,0','f3,0'),('N2','N1'),('N2','F'),('N2','f1,0'),('N2','f2,0'),('N2','f3,0')]
SLOT={'top':((-1,6),(1,6)),'right':((6,1),(6,-1)),'bottom':((1,-6),(-1,-6)),'left':((-6,-1),(-6,1))}
NORM={'top':(0,-1),'right':(-1,0),'bottom':(0,1),'left':(1,0)}
def vtile(sides, routes, pend=None, missing=None, offset=(0,0)):
    """sides: pair -> (side, 'TF'|'FT'); routes: 't1' -> waypoint list"""
    d=Design(square())
    for i,n in enumerate(base): d.add(n,np.add(SEED[n],offset))
    if pend:
        for n,p in pend.items(): d.pos[n]=np.array(p,float)
    for e in CE: d.edge(*e)
    for k in '123': d.shortok.add(frozenset(('a'+k,'b'+k))); d.equal.append((f'f{k},0','a'+k,'b'+k))
    for i,(side,o) in sides.items():
        first,second=SLOT[side]
        ts,fs=(first,second) if o=='TF' else (second,first)
        nx,ny=NORM[side]
        for s,p in (('t',ts),('f',fs)):
            d.add(f'{s}{i},14',p,fixed=True,tf=True); d.add(f'{s}{i},13',(p[0]+nx,p[1]+ny),fixed=True)
            d.edge(f'{s}{i},13',f'{s}{i},14')
            sp=d.path([f'{s}{i},{j}' for j in range(0,14)],[np.add(J1[f'{s}{i}'],offset)]+routes[f'{s}{i}'])
            print(s,i,'spacing',round(sp,3))
    return d

def run(name, sides, R, offset=(0,0), rounds=12, **kw):
    d=vtile(sides,R,offset=offset)
    d.plot(f'tiles/{name}_init.png')
    rng=np.random.default_rng(1)
    for r in range(rounds):
        if r>=2:
            for n in d.pos:
                if n not in d.fixed: d.pos[n]=d.pos[n]+rng.normal(0,0.04,2)
        v=d.optimize(nmin=1.03,emax=0.975 if r==0 else 0.96,gab=0.05,**kw); b=d.check(); print(name,'loss',round(v,3),'bad',len(b),b[:6],flush=True)
        if not b: break
    d.plot(f'tiles/{name}.png'); d.dump(f'tiles/{name}.json')
    return d,b
