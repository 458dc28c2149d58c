import numpy as np, torch, itertools, math, json
from shapely.geometry import Polygon, Point, box
from shapely.ops import unary_union
torch.set_default_dtype(torch.float64)

def square(cx=0,cy=0): return box(cx-6,cy-6,cx+6,cy+6)

def resample(pts, n):
    """n interior points evenly spaced along polyline pts (endpoints excluded)."""
    P=np.array(pts,float); seg=np.linalg.norm(np.diff(P,axis=0),axis=1); L=np.concatenate([[0],np.cumsum(seg)])
    out=[]
    for k in range(1,n+1):
        s=L[-1]*k/(n+1); i=min(np.searchsorted(L,s,side='right')-1,len(seg)-1)
        u=(s-L[i])/seg[i] if seg[i]>0 else 0; out.append(P[i]+u*(P[i+1]-P[i]))
    return out, L[-1]

class Design:
    def __init__(self, region):
        self.region=region; self.pos={}; self.fixed=set(); self.E=[]; self.tf=set(); self.shortok=set(); self.equal=[]
    def add(self,n,p,fixed=False,tf=False):
        self.pos[n]=np.array(p,float)
        if fixed: self.fixed.add(n)
        if tf: self.tf.add(n)
    def edge(self,u,v): self.E.append((u,v))
    def path(self,names,waypoints):
        """names[0] and names[-1] must exist; interior names placed along waypoints."""
        pts=[self.pos[names[0]]]+[np.array(w,float) for w in waypoints]+[self.pos[names[-1]]]
        mids,L=resample(pts,len(names)-2)
        for n,p in zip(names[1:-1],mids): self.add(n,p)
        for a,b in zip(names,names[1:]): self.edge(a,b)
        return L/(len(names)-1)
    def optimize(self, emax=0.95, emin=0.5, nmin=1.06, depth=1.04, gab=0.15, iters=3000, anchor=0.0, lr=None):
        names=list(self.pos); idx={n:i for i,n in enumerate(names)}; N=len(names)
        X0=torch.tensor(np.array([self.pos[n] for n in names]))
        free=torch.tensor([n not in self.fixed for n in names])
        Es={frozenset(e) for e in self.E}
        I,J=np.triu_indices(N,1)
        ise=torch.tensor([frozenset((names[a],names[b])) in Es for a,b in zip(I,J)])
        em=torch.tensor([0.03 if frozenset((names[a],names[b])) in self.shortok else emin for a,b in zip(I,J)])
        both_fixed=(~free[I])&(~free[J])
        I=torch.tensor(I);J=torch.tensor(J)
        adj={n:set() for n in names}
        for u,v in self.E: adj[u].add(v); adj[v].add(u)
        T=[(idx[u],idx[v],idx[w]) for u,v in self.E for w in adj[u]&adj[v]]
        T=torch.tensor(T).reshape(-1,3)
        bd=self.region.exterior
        segs=[]
        for ring in [self.region.exterior]+list(self.region.interiors):
            c=np.array(ring.coords); segs+= [(c[k],c[k+1]) for k in range(len(c)-1)]
        A=torch.tensor(np.array([s[0] for s in segs])); B=torch.tensor(np.array([s[1] for s in segs]))
        inner=torch.tensor([ (n not in self.tf) for n in names]) & free
        x=X0.clone().requires_grad_(True)
        opt=torch.optim.LBFGS([x],max_iter=iters,line_search_fn='strong_wolfe',tolerance_grad=1e-12,tolerance_change=1e-14)
        def loss():
            opt.zero_grad()
            X=torch.where(free[:,None],x,X0)
            D=torch.linalg.norm(X[I]-X[J],dim=1)
            p=torch.where(ise,torch.relu(D-emax)**2+torch.relu(em-D)**2,torch.relu(nmin-D)**2)
            p=p[~both_fixed].sum()
            if len(T):
                U,V,W=X[T[:,0]],X[T[:,1]],X[T[:,2]]
                g=((U-W)**2).sum(1)+((W-V)**2).sum(1)-((U-V)**2).sum(1)
                p=p+torch.relu(gab-g).pow(2).sum()
            for (c,u,v) in self.equal:
                p=p+10*(torch.linalg.norm(X[idx[u]]-X[idx[c]])-torch.linalg.norm(X[idx[v]]-X[idx[c]]))**2
            P=X[inner]
            AB=B-A; t=(((P[:,None,:]-A[None])*AB[None]).sum(2)/(AB*AB).sum(1)[None]).clamp(0,1)
            C=A[None]+t[...,None]*AB[None]; dist=torch.linalg.norm(P[:,None,:]-C,dim=2).min(1).values
            p=p+torch.relu(depth-dist).pow(2).sum()
            p=1000*p+anchor*((x-X0)**2)[free].sum()
            p.backward(); return p
        for r in range(5): v=opt.step(loss)
        X=torch.where(free[:,None],x,X0).detach().numpy()
        for n in names: self.pos[n]=X[idx[n]]
        return float(v)
    def check(self, scale=10000):
        names=list(self.pos); N=len(names)
        Xi={n:np.round(self.pos[n]*scale).astype(np.int64) for n in names}
        Es={frozenset(e) for e in self.E}; bad=[]
        for a,b in itertools.combinations(names,2):
            d2=int(((Xi[a]-Xi[b])**2).sum()); e=frozenset((a,b)) in Es
            if e and d2>scale*scale: bad.append(('long',a,b,d2/scale**2))
            if not e and d2*10**6<1001**2*scale*scale: bad.append(('short',a,b,d2/scale**2))
        adj={n:set() for n in names}
        for u,v in self.E: adj[u].add(v); adj[v].add(u)
        for u,v in self.E:
            for w in adj[u]&adj[v]:
                if ((Xi[u]-Xi[w])**2).sum()+((Xi[w]-Xi[v])**2).sum()<=((Xi[u]-Xi[v])**2).sum(): bad.append(('gab',u,v,w))
        for n in names:
            p=Point(*(Xi[n]/scale))
            if n in self.tf:
                if self.region.exterior.distance(p)>1e-9: bad.append(('slot',n))
            else:
                if not self.region.contains(p) or self.region.exterior.distance(p)<1-1e-9: bad.append(('depth',n,self.region.exterior.distance(p)))
        return bad
    def plot(self,fn,labels=True):
        import matplotlib; matplotlib.use('Agg'); import matplotlib.pyplot as plt
        fig,ax=plt.subplots(figsize=(9,9))
        x,y=self.region.exterior.xy; ax.plot(x,y,'b-')
        for u,v in self.E: ax.plot(*zip(self.pos[u],self.pos[v]),'k-',lw=1)
        for n,p in self.pos.items():
            ax.plot(*p,'o',ms=3,color='r' if n.startswith('t') else 'g' if n.startswith('f') else 'k')
            if labels and not (',' in n and 0<int(n.split(',')[1])<13 and int(n.split(',')[1])%3): ax.text(*p,n,fontsize=6)
        ax.set_aspect('equal'); ax.grid(True,alpha=0.3); plt.savefig(fn,dpi=70); plt.close(fig)
    def dump(self,fn):
        json.dump({'pos':{n:list(map(float,p)) for n,p in self.pos.items()},'E':self.E,'tf':sorted(self.tf)},open(fn,'w'))
